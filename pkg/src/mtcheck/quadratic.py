"""Rank data for square-zero (quadratic) nilpotents in cataloged modules.

The recorded ranks are the ones the case analysis relies on: a quadratic
element of (A_m, ws) has rank binom(m-1, s-1); the classical w1 modules
admit minimal rank 1 (symplectic) or 2 (orthogonal); a half-spin module of
D_m forces rank 2^(m-3) or 2^(m-2).  The exceptional types deliberately
carry no rank data: callers must exclude them rather than read a number.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .catalog import IrrepDescriptor, descriptor
from .roots import FormClass, LieType


class RankUnavailableError(ValueError):
    """No quadratic rank data; the caller must exclude this candidate."""


@dataclass(frozen=True)
class QuadraticRankProfile:
    """Recorded quadratic ranks of a module, minimal first."""

    irrep: IrrepDescriptor
    ranks: tuple[int, ...]

    def __post_init__(self):
        if not self.ranks or list(self.ranks) != sorted(self.ranks):
            raise ValueError("ranks must be nonempty and ascending")
        if self.ranks[0] < 1:
            raise ValueError("minimal rank must be >= 1")
        if 2 * self.ranks[-1] > self.irrep.dim:
            raise ValueError("a square-zero rank cannot exceed dim/2")

    @property
    def min_rank(self) -> int:
        return self.ranks[0]


def quadratic_rank_profile(irrep: IrrepDescriptor) -> QuadraticRankProfile:
    f, m = irrep.lie_type.family, irrep.lie_type.rank
    s = irrep.weight_index
    if f == "E":
        raise RankUnavailableError(f"no quadratic rank data for {irrep.lie_type}")
    if f == "A":
        ranks = (comb(m - 1, s - 1),)
    elif f == "C":
        ranks = (1,)
    elif f == "B" or s == 1:
        ranks = (2,)
    else:  # D_m half-spin
        ranks = (2 ** (m - 3), 2 ** (m - 2))
    return QuadraticRankProfile(irrep, ranks)


def quadratic_ranks(irrep: IrrepDescriptor) -> tuple[int, ...]:
    return quadratic_rank_profile(irrep).ranks


def quadratic_min_rank(irrep: IrrepDescriptor) -> int:
    return quadratic_rank_profile(irrep).min_rank


@dataclass(frozen=True)
class AlgebraShape:
    """A candidate algebra acting irreducibly: one factor, or a x sl2."""

    factors: tuple[IrrepDescriptor, ...]

    def __post_init__(self):
        if len(self.factors) not in (1, 2):
            raise ValueError("shapes have one or two factors")

    @property
    def dim(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    @property
    def form(self) -> FormClass:
        if len(self.factors) == 1:
            return self.factors[0].form
        return tensor_form(self.factors[0].form, self.factors[1].form)

    @property
    def label(self) -> str:
        return " x ".join(f.label for f in self.factors)

    def sort_key(self):
        return (len(self.factors),) + tuple(f.sort_key() for f in self.factors)


def tensor_form(a: FormClass, b: FormClass) -> FormClass:
    """Duality class of a tensor product of irreducibles of distinct factors."""
    if FormClass.NON_SELF_DUAL in (a, b):
        return FormClass.NON_SELF_DUAL
    if a == b:
        return FormClass.ORTHOGONAL
    return FormClass.SYMPLECTIC


def transvection_constraint(n: int) -> tuple[IrrepDescriptor, ...]:
    """Irreducible dim-n modules containing a rank-1 quadratic element.

    Exactly the full sl(U) standard module, plus sp(U) when n is even; for
    n = 2 the symplectic case coincides with (A_1, w1).
    """
    if n < 2:
        raise ValueError("transvection constraint needs n >= 2")
    shapes = [descriptor(LieType("A", n - 1), 1)]
    if n % 2 == 0 and n >= 4:
        shapes.append(descriptor(LieType("C", n // 2), 1))
    return tuple(shapes)


def rank2_constraint(n: int) -> tuple[AlgebraShape, ...]:
    """Candidate shapes for a dim-n module (n >= 8) with a rank-2 quadratic
    element: the classical standard modules plus the products a x sl2 with
    a in {sl(n/2), sp(n/2)} acting on a tensor split."""
    if n < 8:
        raise ValueError("rank-2 constraint assumes n >= 8")
    shapes = [AlgebraShape((descriptor(LieType("A", n - 1), 1),))]
    if n % 2 == 0:
        shapes.append(AlgebraShape((descriptor(LieType("C", n // 2), 1),)))
        shapes.append(AlgebraShape((descriptor(LieType("D", n // 2), 1),)))
        sl2 = descriptor(LieType("A", 1), 1)
        g = n // 2
        shapes.append(AlgebraShape((descriptor(LieType("A", g - 1), 1), sl2)))
        if g % 2 == 0 and g >= 4:
            shapes.append(AlgebraShape((descriptor(LieType("C", g // 2), 1), sl2)))
    else:
        shapes.append(AlgebraShape((descriptor(LieType("B", (n - 1) // 2), 1),)))
    return tuple(sorted(shapes, key=AlgebraShape.sort_key))
