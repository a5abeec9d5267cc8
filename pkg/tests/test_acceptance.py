"""Acceptance suite: one test per criterion, each at its stated bound.

Every test prints a ``criterion N ...: PASS`` or ``...: FAIL`` line
(visible with ``pytest -s`` or in captured output for failures).
"""

import functools
import itertools
import time
import xml.etree.ElementTree as ET
from collections import Counter

from touchard import (
    GWord,
    Letter,
    RestrictedGWord,
    binomial,
    catalan,
    catalan_to_g,
    drop_restriction,
    enumerate_dyck,
    enumerate_g,
    enumerate_g_restricted,
    g_to_catalan,
    motzkin_count,
    motzkin_rhs,
    pair_decode,
    pair_encode,
    raise_restriction,
    render_svg,
    sample_dyck,
    to_drawing,
    touchard_rhs,
)

U, D, G, R = Letter.UP, Letter.DOWN, Letter.GREEN_ZERO, Letter.RED_ZERO

# chi-square quantile at 0.999 for 131 degrees of freedom
# (scipy.stats.chi2.ppf(0.999, 131), frozen so the suite stays stdlib-only)
CHI2_999_DOF131 = 186.76212863710677


def criterion(number, label):
    def wrap(test):
        @functools.wraps(test)
        def run(*args, **kwargs):
            try:
                result = test(*args, **kwargs)
            except BaseException:
                print(f"criterion {number} ({label}): FAIL")
                raise
            print(f"criterion {number} ({label}): PASS")
            return result

        return run

    return wrap


@criterion(1, "both identities hold exactly for n <= 500 within 10s")
def test_identities_to_500():
    start = time.perf_counter()
    for n in range(501):
        touchard = touchard_rhs(n)
        motzkin = motzkin_rhs(n)
        assert touchard.holds and touchard.lhs == touchard.rhs == sum(touchard.per_k_terms)
        assert motzkin.holds and motzkin.lhs == motzkin.rhs == sum(motzkin.per_k_terms)
    assert time.perf_counter() - start < 10.0


@criterion(2, "|G_n| = C_{n+1} by exhaustive enumeration for n <= 11 within 60s")
def test_g_cardinalities_to_11():
    start = time.perf_counter()
    assert catalan(12) == 208012  # size of the largest set checked
    for n in range(12):
        assert sum(1 for _ in enumerate_g(n)) == catalan(n + 1)
    assert time.perf_counter() - start < 60.0


@criterion(3, "pair encoding and restriction lift are exhaustive bijections for n <= 10")
def test_bijectivity_to_10():
    for n in range(11):
        dyck = list(enumerate_dyck(n + 1))
        restricted = list(enumerate_g_restricted(n + 1))
        grown = list(enumerate_g(n))

        encoded = [pair_encode(w) for w in dyck]
        assert len(set(encoded)) == len(dyck)  # injective
        assert set(encoded) == set(restricted)  # image is the whole codomain
        assert all(pair_decode(v) == w for w, v in zip(dyck, encoded))
        assert all(pair_encode(pair_decode(v)) == v for v in restricted)

        dropped = [drop_restriction(v) for v in restricted]
        assert len(set(dropped)) == len(restricted)
        assert set(dropped) == set(grown)
        assert all(raise_restriction(u) == v for v, u in zip(restricted, dropped))
        assert all(drop_restriction(raise_restriction(u)) == u for u in grown)


@criterion(4, "stratified censuses equal the identity terms for n <= 9")
def test_censuses_to_9():
    for n in range(10):
        by_nonzero = Counter()
        by_reds = Counter()
        for word in enumerate_g(n):
            by_nonzero[sum(1 for letter in word if letter.step != 0)] += 1
            by_reds[sum(1 for letter in word if letter is R)] += 1
        assert set(by_nonzero) <= {2 * k for k in range(n // 2 + 1)}
        for k in range(n // 2 + 1):
            assert by_nonzero[2 * k] == binomial(n, 2 * k) * 2 ** (n - 2 * k) * catalan(k)
        for k in range(n + 1):
            assert by_reds[n - k] == binomial(n, k) * motzkin_count(k)


@criterion(5, "worked small cases match the hand tables")
def test_worked_small_cases():
    g1 = list(enumerate_g(1))
    assert [str(u) for u in g1] == ["G", "R"]
    c2 = list(enumerate_dyck(2))
    assert {str(w) for w in c2} == {"UUDD", "UDUD"}
    assert {g_to_catalan(u) for u in g1} == set(c2)
    assert str(catalan_to_g(c2[0])) == "R"  # UUDD
    assert str(catalan_to_g(c2[1])) == "G"  # UDUD

    g2 = list(enumerate_g(2))
    assert len(g2) == 5
    assert {g_to_catalan(u) for u in g2} == set(enumerate_dyck(3))
    assert all(catalan_to_g(g_to_catalan(u)) == u for u in g2)

    assert touchard_rhs(3).per_k_terms == (8, 6)


@criterion(6, "no rendered restricted word has a red segment starting at ground level")
def test_svg_restriction_to_length_8():
    for length in range(1, 9):
        for word in enumerate_g_restricted(length):
            svg = render_svg(to_drawing(word), 10)
            root = ET.fromstring(svg)
            lines = [el for el in root.iter() if el.tag.endswith("line")]
            axis_y = int(next(el for el in lines if el.get("class") == "axis").get("y1"))
            for el in lines:
                if el.get("class") == "step" and el.get("stroke") == "#C00000":
                    assert int(el.get("y1")) != axis_y


@criterion(7, "26400 samples of C_6 cover every word with chi-square below the 0.999 quantile")
def test_sampling_uniformity():
    counts = Counter(str(sample_dyck(6, seed)) for seed in range(132 * 200))
    assert len(counts) == 132
    expected = 200.0
    statistic = sum((observed - expected) ** 2 / expected for observed in counts.values())
    assert statistic < CHI2_999_DOF131


# --- criterion 8: the exhaustive checks must catch planted faults -----------

_SWAPPED_PAIRS = {
    (U, U): U,
    (U, D): R,  # colors deliberately exchanged
    (D, U): G,
    (D, D): D,
}


def _encode_with_swapped_colors(word):
    letters = word.letters
    return RestrictedGWord(
        tuple(_SWAPPED_PAIRS[letters[i], letters[i + 1]] for i in range(0, len(letters), 2))
    )


def _raise_targeting_last_violation(word):
    letters = word.letters
    last = None
    height = 0
    for i, letter in enumerate(letters):
        if letter is R and height == 0:
            last = i
        height += letter.step
    if last is None:
        return RestrictedGWord(letters + (G,))
    return RestrictedGWord(letters[:last] + (U,) + letters[last + 1 :] + (D,))


def _pair_bijection_holds(encode, n):
    """The criterion-3 predicate for the encoding side, as a boolean."""
    try:
        dyck = list(enumerate_dyck(n + 1))
        encoded = [encode(w) for w in dyck]
        return (
            len(set(encoded)) == len(dyck)
            and set(encoded) == set(enumerate_g_restricted(n + 1))
            and all(pair_decode(v) == w for w, v in zip(dyck, encoded))
        )
    except ValueError:
        return False


def _restriction_bijection_holds(lift, n):
    try:
        restricted = list(enumerate_g_restricted(n + 1))
        return all(lift(drop_restriction(v)) == v for v in restricted) and all(
            drop_restriction(lift(u)) == u for u in enumerate_g(n)
        )
    except ValueError:
        return False


@criterion(8, "planted faults in the pair table or the lifting rule break criterion 3")
def test_mutations_are_detected():
    for n in range(2, 5):
        assert _pair_bijection_holds(pair_encode, n)
        assert _restriction_bijection_holds(raise_restriction, n)
        assert not _pair_bijection_holds(_encode_with_swapped_colors, n)
        assert not _restriction_bijection_holds(_raise_targeting_last_violation, n)
