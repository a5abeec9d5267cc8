"""Exact big-integer evaluation of the two Catalan convolution identities.

Both right-hand sides count bicolored Motzkin words of length n, once
by the support of the up/down letters and once by the support of the
red zeros:

    C_{n+1} = sum_{k=0}^{n/2} binom(n, 2k) * 2^(n-2k) * C_k
    C_{n+1} = sum_{k=0}^{n}   binom(n, k) * M_k

Everything here is exact integer arithmetic; no tolerances apply.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """n-th Catalan number, binom(2n, n) // (n + 1); the division is exact."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


_motzkin_table = [1]
_motzkin_lock = threading.Lock()


def motzkin_count(k: int) -> int:
    """Number of Motzkin words of length k.

    Extends a shared table with the first-return recurrence
    M_{m+1} = M_m + sum_{i<m} M_i * M_{m-1-i}: a nonempty word either
    starts flat or opens an arch closed at its first return to ground.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    with _motzkin_lock:
        while len(_motzkin_table) <= k:
            m = len(_motzkin_table) - 1
            _motzkin_table.append(
                _motzkin_table[m]
                + sum(_motzkin_table[i] * _motzkin_table[m - 1 - i] for i in range(m))
            )
        return _motzkin_table[k]


@dataclass(frozen=True)
class IdentityReport:
    """One evaluation of an identity at index n.

    ``lhs`` is C_{n+1}, ``per_k_terms`` the summands of the right-hand
    side, ``rhs`` their total, and ``holds`` whether the two sides agree.
    """

    n: int
    lhs: int
    rhs: int
    per_k_terms: tuple[int, ...]
    holds: bool

    def format_line(self) -> str:
        """Machine-readable line, e.g. ``n=3 lhs=14 rhs=14 holds=true terms=8,6``."""
        terms = ",".join(str(t) for t in self.per_k_terms)
        flag = "true" if self.holds else "false"
        return f"n={self.n} lhs={self.lhs} rhs={self.rhs} holds={flag} terms={terms}"


def _report(n: int, terms: tuple[int, ...]) -> IdentityReport:
    lhs = catalan(n + 1)
    rhs = sum(terms)
    return IdentityReport(n, lhs, rhs, terms, lhs == rhs)


def touchard_rhs(n: int) -> IdentityReport:
    """Evaluate C_{n+1} against sum_k binom(n, 2k) 2^(n-2k) C_k."""
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = tuple(
        binomial(n, 2 * k) * 2 ** (n - 2 * k) * catalan(k) for k in range(n // 2 + 1)
    )
    return _report(n, terms)


def motzkin_rhs(n: int) -> IdentityReport:
    """Evaluate C_{n+1} against sum_k binom(n, k) M_k."""
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = tuple(binomial(n, k) * motzkin_count(k) for k in range(n + 1))
    return _report(n, terms)
