"""Invertible maps between Dyck words and bicolored Motzkin words.

Composing the two core maps shows that G-words of length n are counted
by C_{n+1}:

* ``pair_encode`` reads a Dyck word two letters at a time and emits one
  bicolored letter per pair (UU -> U, UD -> G, DU -> R, DD -> D).  Its
  image is exactly the restricted words: a red zero comes from a pair
  that starts with a down-step, which forces the path strictly above
  ground just before it.
* ``drop_restriction`` removes the restriction by deleting a final
  green zero, or, when the word ends with a down-step, by replacing the
  opener of the last arch with a red zero at ground level and deleting
  the closing down-step.  ``raise_restriction`` inverts it; the red
  zero inserted this way is the first ground-level red zero, which is
  why the inverse targets the first violation.

``touchard_split``/``touchard_merge`` and ``motzkin_split``/
``motzkin_merge`` decompose a G-word by the positions of its up/down
letters (leaving a Dyck core plus a color choice per zero slot) or by
the positions of its red zeros (leaving a Motzkin core).  Counting the
decompositions class by class yields

    C_{n+1} = sum_k binom(n, 2k) 2^(n-2k) C_k   and
    C_{n+1} = sum_k binom(n, k) M_k.

All maps are pure; outputs are re-checked on construction in debug
runs (see ``words``).  Position indices in decompositions and in their
line formats are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .words import (
    DyckWord,
    GWord,
    Letter,
    MotzkinWord,
    RestrictedGWord,
    parse_letters,
    prefix_sums,
    validate_dyck,
    validate_motzkin,
)


class InvalidDecomposition(ValueError):
    """A decomposition's fields are structurally inconsistent."""


_PAIR_TO_LETTER = {
    (Letter.UP, Letter.UP): Letter.UP,
    (Letter.UP, Letter.DOWN): Letter.GREEN_ZERO,
    (Letter.DOWN, Letter.UP): Letter.RED_ZERO,
    (Letter.DOWN, Letter.DOWN): Letter.DOWN,
}
_LETTER_TO_PAIR = {letter: pair for pair, letter in _PAIR_TO_LETTER.items()}


def pair_encode(word: DyckWord) -> RestrictedGWord:
    """Compress a Dyck word of semilength m into a restricted word of length m.

    Letter i of the output encodes the pair (letters 2i-1, 2i) of the
    input.  The output prefix sums are half the input's even-position
    prefix sums, so the result is again balanced and non-negative, and
    every red zero lands strictly above ground level.
    """
    letters = word.letters
    if not letters:
        raise ValueError("pair encoding needs at least one letter pair")
    encoded = tuple(
        _PAIR_TO_LETTER[letters[i], letters[i + 1]] for i in range(0, len(letters), 2)
    )
    return RestrictedGWord(encoded)


def pair_decode(word: RestrictedGWord) -> DyckWord:
    """Expand each bicolored letter back into its two-letter Dyck block."""
    expanded: list[Letter] = []
    for letter in word.letters:
        expanded.extend(_LETTER_TO_PAIR[letter])
    return DyckWord(tuple(expanded))


def drop_restriction(word: RestrictedGWord) -> GWord:
    """Shorten a restricted word by one letter, forgetting the restriction.

    If the word ends with a green zero, chop it.  Otherwise the last
    letter is a down-step (an up-step would unbalance the word and a
    final red zero would sit at ground level): replace the up-step that
    opens the last arch with a red zero and delete the final down-step.
    That red zero lands at ground level, ahead of any other ground-level
    red zero in the result.
    """
    letters = word.letters
    if letters[-1] is Letter.GREEN_ZERO:
        return GWord(letters[:-1])
    sums = prefix_sums(letters)
    cut = 0  # length of the longest proper prefix returning to ground
    for i in range(len(letters) - 1):
        if sums[i] == 0:
            cut = i + 1
    assert letters[cut] is Letter.UP
    return GWord(letters[:cut] + (Letter.RED_ZERO,) + letters[cut + 1 : -1])


def raise_restriction(word: GWord) -> RestrictedGWord:
    """Lengthen a G-word by one letter so the red-zero restriction holds.

    If no red zero sits at ground level, append a green zero.  Otherwise
    replace the first ground-level red zero with an up-step and append a
    down-step, rebuilding the arch that ``drop_restriction`` removed.
    """
    letters = word.letters
    height = 0
    for i, letter in enumerate(letters):
        if letter is Letter.RED_ZERO and height == 0:
            return RestrictedGWord(
                letters[:i] + (Letter.UP,) + letters[i + 1 :] + (Letter.DOWN,)
            )
        height += letter.step
    return RestrictedGWord(letters + (Letter.GREEN_ZERO,))


def catalan_to_g(word: DyckWord) -> GWord:
    """drop_restriction after pair_encode: C_{n+1} onto G-words of length n."""
    return drop_restriction(pair_encode(word))


def g_to_catalan(word: GWord) -> DyckWord:
    """pair_decode after raise_restriction: inverse of ``catalan_to_g``."""
    return pair_decode(raise_restriction(word))


@dataclass(frozen=True)
class TouchardDecomposition:
    """A G-word split by the support of its up/down letters.

    ``positions`` lists the 1-based slots of the 2k up/down letters,
    ``core`` is the Dyck word they spell, and ``colors`` gives the color
    of each remaining zero slot in position order (True = red).  There
    are binom(n, 2k) * C_k * 2^(n-2k) decompositions with |positions| = 2k.
    """

    n: int
    positions: tuple[int, ...]
    core: DyckWord
    colors: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(self.positions))
        object.__setattr__(self, "colors", tuple(bool(c) for c in self.colors))
        if len(self.positions) != 2 * self.core.semilength:
            raise InvalidDecomposition("positions must hold one slot per core letter")
        if len(self.colors) != self.n - len(self.positions):
            raise InvalidDecomposition("colors must cover exactly the zero slots")
        if any(p < 1 or p > self.n for p in self.positions):
            raise InvalidDecomposition(f"positions must lie in 1..{self.n}")
        if any(a >= b for a, b in zip(self.positions, self.positions[1:])):
            raise InvalidDecomposition("positions must be strictly increasing")


@dataclass(frozen=True)
class MotzkinDecomposition:
    """A G-word split by the support of its red zeros.

    ``red_positions`` lists the 1-based slots of the n-k red zeros and
    ``core`` is the Motzkin word left by the other letters (green zeros
    become flats).  There are binom(n, k) * M_k decompositions whose
    core has length k.
    """

    n: int
    red_positions: tuple[int, ...]
    core: MotzkinWord

    def __post_init__(self) -> None:
        object.__setattr__(self, "red_positions", tuple(self.red_positions))
        if len(self.red_positions) + len(self.core) != self.n:
            raise InvalidDecomposition("red slots and core letters must fill the word")
        if any(p < 1 or p > self.n for p in self.red_positions):
            raise InvalidDecomposition(f"red positions must lie in 1..{self.n}")
        if any(a >= b for a, b in zip(self.red_positions, self.red_positions[1:])):
            raise InvalidDecomposition("red positions must be strictly increasing")


def touchard_split(word: GWord) -> TouchardDecomposition:
    """Extract the up/down support, the Dyck core, and the zero colors."""
    positions = []
    core = []
    colors = []
    for i, letter in enumerate(word.letters, start=1):
        if letter.step != 0:
            positions.append(i)
            core.append(letter)
        else:
            colors.append(letter is Letter.RED_ZERO)
    return TouchardDecomposition(
        len(word), tuple(positions), DyckWord(tuple(core)), tuple(colors)
    )


def touchard_merge(decomposition: TouchardDecomposition) -> GWord:
    """Reassemble the G-word; inverse of ``touchard_split``.

    Always yields a valid word: zeros do not move prefix sums, so the
    assembled sums are the core's sums stretched out (checked on
    construction in debug runs, not assumed).
    """
    filled = dict(zip(decomposition.positions, decomposition.core.letters))
    letters = []
    color = iter(decomposition.colors)
    for i in range(1, decomposition.n + 1):
        letter = filled.get(i)
        if letter is None:
            letter = Letter.RED_ZERO if next(color) else Letter.GREEN_ZERO
        letters.append(letter)
    return GWord(tuple(letters))


_MOTZKIN_TO_G = {
    Letter.UP: Letter.UP,
    Letter.DOWN: Letter.DOWN,
    Letter.FLAT: Letter.GREEN_ZERO,
}
_G_TO_MOTZKIN = {g: m for m, g in _MOTZKIN_TO_G.items()}


def motzkin_split(word: GWord) -> MotzkinDecomposition:
    """Record the red-zero slots and read the rest as a Motzkin word."""
    red_positions = []
    core = []
    for i, letter in enumerate(word.letters, start=1):
        if letter is Letter.RED_ZERO:
            red_positions.append(i)
        else:
            core.append(_G_TO_MOTZKIN[letter])
    return MotzkinDecomposition(len(word), tuple(red_positions), MotzkinWord(tuple(core)))


def motzkin_merge(decomposition: MotzkinDecomposition) -> GWord:
    """Reinsert the red zeros into the Motzkin core; inverse of ``motzkin_split``.

    Red zeros leave prefix sums unchanged, so the merge of any valid
    decomposition is a valid G-word.
    """
    reds = set(decomposition.red_positions)
    core = iter(decomposition.core.letters)
    letters = []
    for i in range(1, decomposition.n + 1):
        if i in reds:
            letters.append(Letter.RED_ZERO)
        else:
            letters.append(_MOTZKIN_TO_G[next(core)])
    return GWord(tuple(letters))


_TOUCHARD_LINE = re.compile(r"positions=\[([\d,]*)\];core=(\w*);colors=([01]*)")
_MOTZKIN_LINE = re.compile(r"red=\[([\d,]*)\];core=(\w*)")


def _parse_positions(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",") if p)


def format_touchard_decomposition(decomposition: TouchardDecomposition) -> str:
    """One-line form ``positions=[i,j,...];core=<word>;colors=<bits>``."""
    positions = ",".join(str(p) for p in decomposition.positions)
    colors = "".join("1" if c else "0" for c in decomposition.colors)
    return f"positions=[{positions}];core={decomposition.core};colors={colors}"


def parse_touchard_decomposition(line: str) -> TouchardDecomposition:
    match = _TOUCHARD_LINE.fullmatch(line)
    if match is None:
        raise InvalidDecomposition(f"cannot parse decomposition line {line!r}")
    positions = _parse_positions(match.group(1))
    core = validate_dyck(parse_letters(match.group(2)))
    colors = tuple(bit == "1" for bit in match.group(3))
    return TouchardDecomposition(len(positions) + len(colors), positions, core, colors)


def format_motzkin_decomposition(decomposition: MotzkinDecomposition) -> str:
    """One-line form ``red=[i,...];core=<word>``."""
    reds = ",".join(str(p) for p in decomposition.red_positions)
    return f"red=[{reds}];core={decomposition.core}"


def parse_motzkin_decomposition(line: str) -> MotzkinDecomposition:
    match = _MOTZKIN_LINE.fullmatch(line)
    if match is None:
        raise InvalidDecomposition(f"cannot parse decomposition line {line!r}")
    red_positions = _parse_positions(match.group(1))
    core = validate_motzkin(parse_letters(match.group(2)))
    return MotzkinDecomposition(len(red_positions) + len(core), red_positions, core)
