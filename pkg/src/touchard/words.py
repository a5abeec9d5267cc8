"""Validated lattice-path words: Dyck, bicolored Motzkin, and Motzkin.

Four word families over letters valued in {+1, 0, -1}:

* ``DyckWord``: up/down letters summing to zero with non-negative prefix
  sums.  Words of semilength n are counted by the Catalan number C_n.
* ``GWord``: a bicolored Motzkin word.  The zero-valued letter comes in
  two colors, green and red; the same balance conditions apply.  There
  are C_{n+1} words of length n.
* ``RestrictedGWord``: a GWord in which every red zero sits strictly
  above ground level (the prefix sum before each red zero is positive).
  These words have at least one letter.
* ``MotzkinWord``: up/flat/down letters, counted by Motzkin numbers.

Words are immutable values.  Construct them through the ``validate_*``
functions (which raise the typed errors below) or take them from the
enumerators and the sampler; direct construction re-checks the
invariants when Python runs with ``__debug__`` and skips the check
under ``-O``, so downstream code may always assume validity.

Text encoding, shared with the CLI: one character per letter
('U' up, 'D' down, 'G' green zero, 'R' red zero, 'H' flat), one word
per line, the empty line being the empty word.

Enumeration is lexicographic under the fixed letter order
U < G < R < D (U < H < D for Motzkin words), chosen so golden outputs
are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class Letter(Enum):
    """A path letter; ``step`` is its contribution to prefix sums."""

    UP = ("U", +1)
    GREEN_ZERO = ("G", 0)
    RED_ZERO = ("R", 0)
    DOWN = ("D", -1)
    FLAT = ("H", 0)

    def __init__(self, symbol: str, step: int) -> None:
        self.symbol = symbol
        self.step = step

    def __repr__(self) -> str:
        return f"Letter.{self.name}"


# Tuple order doubles as the lexicographic enumeration order.
DYCK_ALPHABET = (Letter.UP, Letter.DOWN)
G_ALPHABET = (Letter.UP, Letter.GREEN_ZERO, Letter.RED_ZERO, Letter.DOWN)
MOTZKIN_ALPHABET = (Letter.UP, Letter.FLAT, Letter.DOWN)

_BY_SYMBOL = {letter.symbol: letter for letter in Letter}


class WordError(ValueError):
    """A letter sequence violates the invariants of a word family."""


class BadAlphabet(WordError):
    """A letter (or input character) outside the family's alphabet."""


class NotBalanced(WordError):
    """The letters do not sum to zero."""


class NegativePrefix(WordError):
    """Some prefix sum dips below zero."""


class RedZeroAtGroundLevel(WordError):
    """A red zero whose preceding prefix sum is zero, in a restricted word."""


def prefix_sums(letters: Iterable[Letter]) -> list[int]:
    """Running totals of the letters' steps; entry i covers letters[:i+1]."""
    sums = []
    total = 0
    for letter in letters:
        total += letter.step
        sums.append(total)
    return sums


def _check_path(letters: tuple[Letter, ...], allowed: frozenset[Letter], family: str) -> None:
    height = 0
    for i, letter in enumerate(letters):
        if letter not in allowed:
            raise BadAlphabet(f"{family} word may not contain {letter.symbol!r} (position {i + 1})")
        height += letter.step
        if height < 0:
            raise NegativePrefix(f"prefix sum falls below zero at position {i + 1}")
    if height != 0:
        raise NotBalanced(f"letters sum to {height}, not zero")


_DYCK_SET = frozenset(DYCK_ALPHABET)
_G_SET = frozenset(G_ALPHABET)
_MOTZKIN_SET = frozenset(MOTZKIN_ALPHABET)


def _check_dyck(letters: tuple[Letter, ...]) -> None:
    _check_path(letters, _DYCK_SET, "Dyck")


def _check_g(letters: tuple[Letter, ...]) -> None:
    _check_path(letters, _G_SET, "bicolored Motzkin")


def _check_g_restricted(letters: tuple[Letter, ...]) -> None:
    if not letters:
        raise WordError("a restricted word has at least one letter")
    _check_g(letters)
    height = 0
    for i, letter in enumerate(letters):
        if letter is Letter.RED_ZERO and height == 0:
            raise RedZeroAtGroundLevel(f"red zero at position {i + 1} sits at ground level")
        height += letter.step


def _check_motzkin(letters: tuple[Letter, ...]) -> None:
    _check_path(letters, _MOTZKIN_SET, "Motzkin")


@dataclass(frozen=True)
class Word:
    """Shared behavior of the validated word types."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if __debug__:
            self._check(self.letters)

    @staticmethod
    def _check(letters: tuple[Letter, ...]) -> None:
        raise NotImplementedError

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(letter.symbol for letter in self.letters)


class DyckWord(Word):
    """A balanced up/down word whose prefix sums stay non-negative."""

    _check = staticmethod(_check_dyck)

    @property
    def semilength(self) -> int:
        return len(self.letters) // 2


class GWord(Word):
    """A bicolored Motzkin word (zero letters colored green or red)."""

    _check = staticmethod(_check_g)


class RestrictedGWord(GWord):
    """A GWord whose red zeros all sit strictly above ground level."""

    _check = staticmethod(_check_g_restricted)


class MotzkinWord(Word):
    """An up/flat/down word, balanced with non-negative prefix sums."""

    _check = staticmethod(_check_motzkin)


def validate_dyck(letters: Iterable[Letter]) -> DyckWord:
    """Check the Dyck invariants and wrap the letters.

    Raises BadAlphabet, NegativePrefix, or NotBalanced.
    """
    letters = tuple(letters)
    _check_dyck(letters)
    return DyckWord(letters)


def validate_g(letters: Iterable[Letter]) -> GWord:
    """Validate a bicolored Motzkin word."""
    letters = tuple(letters)
    _check_g(letters)
    return GWord(letters)


def validate_g_restricted(letters: Iterable[Letter]) -> RestrictedGWord:
    """Validate a restricted word; also raises RedZeroAtGroundLevel."""
    letters = tuple(letters)
    _check_g_restricted(letters)
    return RestrictedGWord(letters)


def validate_motzkin(letters: Iterable[Letter]) -> MotzkinWord:
    """Validate a Motzkin word."""
    letters = tuple(letters)
    _check_motzkin(letters)
    return MotzkinWord(letters)


def parse_letters(text: str) -> tuple[Letter, ...]:
    """Decode a line of U/D/G/R/H symbols; BadAlphabet on anything else."""
    letters = []
    for ch in text:
        letter = _BY_SYMBOL.get(ch)
        if letter is None:
            raise BadAlphabet(f"unknown letter {ch!r}")
        letters.append(letter)
    return tuple(letters)


def _paths(length: int, alphabet: tuple[Letter, ...], ground_red_ok: bool = True) -> Iterator[tuple[Letter, ...]]:
    """Backtracking generator of balanced non-negative words, in lexicographic
    order of ``alphabet``.  Prune: the prefix sum may never exceed the number
    of letters still to be placed."""
    word: list[Letter] = []

    def extend(height: int, remaining: int) -> Iterator[tuple[Letter, ...]]:
        if remaining == 0:
            yield tuple(word)
            return
        for letter in alphabet:
            new_height = height + letter.step
            if new_height < 0 or new_height > remaining - 1:
                continue
            if not ground_red_ok and letter is Letter.RED_ZERO and height == 0:
                continue
            word.append(letter)
            yield from extend(new_height, remaining - 1)
            word.pop()

    return extend(0, length)


def enumerate_dyck(n: int) -> Iterator[DyckWord]:
    """All Dyck words of semilength n, lexicographically (U before D).

    Yields catalan(n) words.
    """
    if n < 0:
        raise ValueError("semilength must be non-negative")
    for letters in _paths(2 * n, DYCK_ALPHABET):
        yield DyckWord(letters)


def enumerate_g(n: int) -> Iterator[GWord]:
    """All bicolored Motzkin words of length n, lexicographically.

    Yields catalan(n + 1) words.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    for letters in _paths(n, G_ALPHABET):
        yield GWord(letters)


def enumerate_g_restricted(length: int) -> Iterator[RestrictedGWord]:
    """All restricted words with ``length`` letters, lexicographically.

    Yields catalan(length) words; the stream is empty for length 0
    because restricted words are never empty.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if length == 0:
        return
    for letters in _paths(length, G_ALPHABET, ground_red_ok=False):
        yield RestrictedGWord(letters)


def enumerate_motzkin(k: int) -> Iterator[MotzkinWord]:
    """All Motzkin words of length k, lexicographically (U < H < D)."""
    if k < 0:
        raise ValueError("length must be non-negative")
    for letters in _paths(k, MOTZKIN_ALPHABET):
        yield MotzkinWord(letters)


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: a small fixed 64-bit generator.

    The output sequence depends only on the 64-bit seed, so sampled
    words are reproducible across platforms and Python versions.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), rejection-sampled (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (_MASK64 + 1) - (_MASK64 + 1) % bound
        while True:
            draw = self.next_uint64()
            if draw < limit:
                return draw % bound


def sample_dyck(n: int, seed: int) -> DyckWord:
    """Uniform random Dyck word of semilength n; same seed, same word.

    Cycle-lemma construction: shuffle n+1 up-steps and n down-steps.
    Of the 2n+1 rotations of that word exactly one keeps every proper
    prefix sum strictly positive (it starts just after the last minimum
    of the prefix sums).  Dropping its leading up-step leaves a Dyck
    word, and each Dyck word arises from exactly 2n+1 of the equally
    likely shuffles, so the output is exactly uniform over C_n.
    """
    if n < 0:
        raise ValueError("semilength must be non-negative")
    rng = SplitMix64(seed)
    steps = [Letter.UP] * (n + 1) + [Letter.DOWN] * n
    for i in range(len(steps) - 1, 0, -1):  # Fisher-Yates
        j = rng.below(i + 1)
        steps[i], steps[j] = steps[j], steps[i]
    total = 0
    low = 0
    cut = 0  # position just after the last prefix-sum minimum
    for i, letter in enumerate(steps, start=1):
        total += letter.step
        if total <= low:
            low = total
            cut = i
    rotated = steps[cut:] + steps[:cut]
    return DyckWord(tuple(rotated[1:]))
