"""Arithmetic searches behind the coprime-rank case analysis.

Three exact statements are mechanized here: the binomial divisibility
binom(m-1, s-1) | s(m+1-s) holds only for s = 2 or (m, s) = (7, 3); the
coprimality gcd(m-1, m(m+1)/2) = 1 holds exactly for m even or m = 1 mod
4; and the resulting exception pairs (g, r) are (56, 15) together with the
family (m(m+1)/2, m-1).  Family members with m = 3 mod 4 are omitted since
gcd(r, g) = 1 already fails for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd, isqrt


@dataclass(frozen=True)
class ExceptionPair:
    """An exception pair (g, r); family_m is None for the sporadic (56, 15)."""

    g: int
    r: int
    family_m: int | None

    def __post_init__(self):
        if self.family_m is None:
            if (self.g, self.r) != (56, 15):
                raise ValueError("the only sporadic exception pair is (56, 15)")
        else:
            m = self.family_m
            if m < 4 or self.g != m * (m + 1) // 2 or self.r != m - 1:
                raise ValueError(f"not a family exception pair: ({self.g}, {self.r})")
        if gcd(self.g, self.r) != 1:
            raise ValueError("exception pairs satisfy gcd(g, r) = 1")


def divisibility_solutions(m_max: int) -> tuple[tuple[int, int], ...]:
    """All (m, s) with 5 <= m <= m_max, 2 <= s < (m+1)/2 and
    binom(m-1, s-1) | s(m+1-s)."""
    if m_max < 5:
        raise ValueError("m_max must be >= 5")
    out = []
    for m in range(5, m_max + 1):
        for s in range(2, m // 2 + 1):
            if s * (m + 1 - s) % comb(m - 1, s - 1) == 0:
                out.append((m, s))
    return tuple(out)


def gcd_mod4_check(m_max: int) -> tuple[int, ...]:
    """All 4 <= m <= m_max with gcd(m-1, m(m+1)/2) = 1."""
    if m_max < 4:
        raise ValueError("m_max must be >= 4")
    return tuple(
        m for m in range(4, m_max + 1) if gcd(m - 1, m * (m + 1) // 2) == 1
    )


def triangular_m(g: int) -> int | None:
    """The m >= 4 with g = m(m+1)/2, if any."""
    m = (isqrt(8 * g + 1) - 1) // 2
    if m >= 4 and m * (m + 1) // 2 == g:
        return m
    return None


def is_exception_pair(g: int, r: int) -> bool:
    if (g, r) == (56, 15):
        return True
    m = triangular_m(g)
    return m is not None and m % 4 != 3 and r == m - 1


def exception_pairs(g_max: int) -> tuple[ExceptionPair, ...]:
    """All exception pairs with g <= g_max, sorted by (g, r)."""
    if g_max < 10:
        raise ValueError("g_max must be >= 10")
    pairs = []
    m = 4
    while m * (m + 1) // 2 <= g_max:
        if m % 4 != 3:
            pairs.append(ExceptionPair(m * (m + 1) // 2, m - 1, m))
        m += 1
    if g_max >= 56:
        pairs.append(ExceptionPair(56, 15, None))
    return tuple(sorted(pairs, key=lambda p: (p.g, p.r)))
