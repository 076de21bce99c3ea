"""Seeded exact models of split semistable monodromy.

An instance lives on a 2g-dimensional symplectic space and records the
inertia invariants V^I (dim 2g - r), the toric subspace W inside it
(dim r), a lift T with V = V^I + T, and a unipotent monodromy N whose log
tau = N - I is quadratic of rank r with tau(V^I) = 0 and tau: T -> W an
isomorphism.  Instances are built in an adapted symplectic basis and
conjugated by a seeded integer symplectic element, so every entry stays an
exact integer and runs reproduce bit for bit.

Construction guarantees the structural shape; the named theorems
(orthogonality W = (V^I)-perp and the filtration behaviour of tau) are
*verified*, not assumed, by the verify_* functions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .linalg import Matrix, Vector

_ENTRY_BOUND = 9


@dataclass(frozen=True)
class SymplecticSpace:
    """Q^dim with a nondegenerate alternating form (given as a matrix)."""

    dim: int
    form: Matrix

    def __post_init__(self):
        if self.dim < 2 or self.dim % 2 != 0:
            raise ValueError("symplectic spaces have positive even dimension")
        if len(self.form) != self.dim or any(len(r) != self.dim for r in self.form):
            raise ValueError("form matrix has wrong shape")
        mt = linalg.transpose(self.form)
        if any(a != -b for row_a, row_b in zip(self.form, mt) for a, b in zip(row_a, row_b)):
            raise ValueError("form must be alternating")
        if linalg.rank(self.form) != self.dim:
            raise ValueError("form must be nondegenerate")

    def pair(self, u: Vector, v: Vector):
        return linalg.vec_dot(linalg.mat_vec(self.form, v), u)


@dataclass(frozen=True)
class Nilpotent:
    """A square-zero endomorphism."""

    matrix: Matrix

    def __post_init__(self):
        if not linalg.is_zero_matrix(linalg.mat_mul(self.matrix, self.matrix)):
            raise ValueError("matrix must square to zero")

    @property
    def rank(self) -> int:
        return linalg.rank(self.matrix)


@dataclass(frozen=True)
class SpecializationInstance:
    """One seeded monodromy model; see the module docstring for the roles."""

    space: SymplecticSpace
    inertia_invariants: Matrix  # rows span V^I
    toric_sub: Matrix           # rows span W
    lift: Matrix                # rows span T
    monodromy: Matrix           # N
    toric_rank: int

    def __post_init__(self):
        n, r = self.space.dim, self.toric_rank
        if not 1 <= r <= n // 2:
            raise ValueError("toric rank must satisfy 1 <= r <= g")
        if len(self.inertia_invariants) != n - r:
            raise ValueError("V^I must have dimension 2g - r")
        if len(self.toric_sub) != r or len(self.lift) != r:
            raise ValueError("W and T must have dimension r")
        for name, basis in (("V^I", self.inertia_invariants),
                            ("W", self.toric_sub), ("T", self.lift)):
            if linalg.rank(basis) != len(basis):
                raise ValueError(f"basis of {name} is not independent")
        for w in self.toric_sub:
            if not linalg.row_space_contains(self.inertia_invariants, w):
                raise ValueError("W must lie inside V^I")
        if linalg.rank(self.inertia_invariants + self.lift) != n:
            raise ValueError("V^I and T must be complementary")
        tau = self.log_matrix()
        if not linalg.is_zero_matrix(linalg.mat_mul(tau, tau)):
            raise ValueError("N - I must square to zero")

    def log_matrix(self) -> Matrix:
        return linalg.mat_sub(self.monodromy, linalg.identity(self.space.dim))


def standard_symplectic_form(g: int) -> Matrix:
    """Theta(e_i, f_j) = delta_ij on the ordered basis e_1..e_g, f_1..f_g."""
    n = 2 * g
    rows = []
    for i in range(n):
        row = [0] * n
        if i < g:
            row[g + i] = 1
        else:
            row[i - g] = -1
        rows.append(tuple(row))
    return tuple(rows)


def _random_unit_triangular(n: int, rng: random.Random, upper: bool) -> Matrix:
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        rng_range = range(i + 1, n) if upper else range(i)
        for j in rng_range:
            row[j] = rng.randint(-_ENTRY_BOUND, _ENTRY_BOUND)
        rows.append(tuple(row))
    return tuple(rows)


def _invert_unit_triangular(m: Matrix) -> Matrix:
    # unit diagonal keeps the inverse integral
    inv = linalg.inverse(m)
    return tuple(tuple(int(x) for x in row) for row in inv)


def _random_symmetric(n: int, rng: random.Random, invertible: bool) -> Matrix:
    while True:
        entries = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                entries[i][j] = entries[j][i] = rng.randint(-_ENTRY_BOUND, _ENTRY_BOUND)
        m = tuple(tuple(row) for row in entries)
        if not invertible or linalg.det(m) != 0:
            return m


def _block(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    top = [tuple(ra) + tuple(rb) for ra, rb in zip(a, b)]
    bottom = [tuple(rc) + tuple(rd) for rc, rd in zip(c, d)]
    return tuple(top + bottom)


def random_symplectic(g: int, rng: random.Random) -> tuple[Matrix, Matrix]:
    """A seeded integer element of Sp_2g for the standard form, with inverse."""
    n = g
    ident = linalg.identity(n)
    zero = linalg.zeros(n, n)
    lower = _random_unit_triangular(n, rng, upper=False)
    upper = _random_unit_triangular(n, rng, upper=True)
    a = linalg.mat_mul(lower, upper)
    a_inv = linalg.mat_mul(_invert_unit_triangular(upper), _invert_unit_triangular(lower))
    a_inv_t = linalg.transpose(a_inv)
    b = _random_symmetric(n, rng, invertible=False)
    c = _random_symmetric(n, rng, invertible=False)
    diag = _block(a, zero, zero, a_inv_t)
    diag_inv = _block(a_inv, zero, zero, linalg.transpose(a))
    shear_u = _block(ident, b, zero, ident)
    shear_u_inv = _block(ident, tuple(tuple(-x for x in row) for row in b), zero, ident)
    shear_l = _block(ident, zero, c, ident)
    shear_l_inv = _block(ident, zero, tuple(tuple(-x for x in row) for row in c), ident)
    m = linalg.mat_mul(diag, linalg.mat_mul(shear_u, shear_l))
    m_inv = linalg.mat_mul(shear_l_inv, linalg.mat_mul(shear_u_inv, diag_inv))
    return m, m_inv


def build_instance(g: int, r: int, seed: int) -> SpecializationInstance:
    """Deterministic instance for the given genus, toric rank and seed."""
    if not 1 <= r <= g:
        raise ValueError("need 1 <= r <= g")
    rng = random.Random(seed)
    n = 2 * g
    space = SymplecticSpace(n, standard_symplectic_form(g))

    # adapted picture: W = <e_1..e_r>, V^I = <e_1..e_g, f_{r+1}..f_g>,
    # T = <f_1..f_r>, tau(f_j) = sum_i S_ij e_i with S symmetric invertible
    # (symmetry makes N symplectic, invertibility makes tau: T -> W iso)
    s_block = _random_symmetric(r, rng, invertible=True)
    tau0 = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            tau0[i][g + j] = s_block[i][j]
    n0 = tuple(
        tuple(x + (1 if i == j else 0) for j, x in enumerate(row))
        for i, row in enumerate(tau0)
    )

    conj, conj_inv = random_symplectic(g, rng)
    monodromy = linalg.mat_mul(conj, linalg.mat_mul(n0, conj_inv))

    def image(index: int) -> Vector:
        return tuple(row[index] for row in conj)  # conj applied to a basis vector

    w_basis = tuple(image(i) for i in range(r))
    vi_basis = tuple(image(i) for i in range(g)) + tuple(
        image(g + j) for j in range(r, g)
    )
    t_basis = tuple(image(g + j) for j in range(r))
    return SpecializationInstance(
        space=space,
        inertia_invariants=vi_basis,
        toric_sub=w_basis,
        lift=t_basis,
        monodromy=monodromy,
        toric_rank=r,
    )


def log_of_unipotent(n_matrix: Matrix) -> Matrix:
    """tau = N - I for a unipotent N with (N - I)^2 = 0; errors otherwise."""
    tau = linalg.mat_sub(n_matrix, linalg.identity(len(n_matrix)))
    if not linalg.is_zero_matrix(linalg.mat_mul(tau, tau)):
        raise ValueError("monodromy is not unipotent of the required shape")
    return tau


def monodromy_log(inst: SpecializationInstance) -> Nilpotent:
    return Nilpotent(log_of_unipotent(inst.monodromy))


def symplectic_complement(space: SymplecticSpace, basis: Matrix) -> Matrix:
    """Basis of the form-orthogonal complement of the row span."""
    pairing_rows = tuple(linalg.mat_vec(space.form, v) for v in basis)
    return linalg.nullspace(pairing_rows)


def verify_orthogonality(inst: SpecializationInstance) -> bool:
    """Does W equal the form-orthogonal complement of V^I?"""
    comp = symplectic_complement(inst.space, inst.inertia_invariants)
    return linalg.same_span(comp, inst.toric_sub)


def verify_filtration(inst: SpecializationInstance) -> bool:
    """tau kills V^I, maps into W, and restricts to an iso T -> W of rank r."""
    tau = inst.log_matrix()
    r = inst.toric_rank
    if linalg.rank(tau) != r:
        return False
    for v in inst.inertia_invariants:
        if any(x != 0 for x in linalg.mat_vec(tau, v)):
            return False
    basis_cols = tuple(linalg.mat_vec(tau, tuple(col)) for col in linalg.identity(inst.space.dim))
    for img in basis_cols:
        if not linalg.row_space_contains(inst.toric_sub, img):
            return False
    t_images = tuple(linalg.mat_vec(tau, v) for v in inst.lift)
    return linalg.rank(t_images) == r and linalg.same_span(t_images, inst.toric_sub)


def is_form_compatible(inst: SpecializationInstance) -> bool:
    """tau lies in the symplectic algebra: tau^T Theta + Theta tau = 0."""
    tau = inst.log_matrix()
    lhs = linalg.mat_add(
        linalg.mat_mul(linalg.transpose(tau), inst.space.form),
        linalg.mat_mul(inst.space.form, tau),
    )
    return linalg.is_zero_matrix(lhs)


def verify_instance(inst: SpecializationInstance) -> dict[str, bool]:
    """All verified invariants by name (used by the CLI and the sweeps)."""
    tau = inst.log_matrix()
    return {
        "tau_square_zero": linalg.is_zero_matrix(linalg.mat_mul(tau, tau)),
        "tau_rank_r": linalg.rank(tau) == inst.toric_rank,
        "invariant_dim": len(inst.inertia_invariants) == inst.space.dim - inst.toric_rank,
        "orthogonality": verify_orthogonality(inst),
        "filtration": verify_filtration(inst),
        "form_compatible": is_form_compatible(inst),
        "monodromy_symplectic": _preserves_form(inst),
    }


def _preserves_form(inst: SpecializationInstance) -> bool:
    n_mat = inst.monodromy
    lhs = linalg.mat_mul(
        linalg.transpose(n_mat), linalg.mat_mul(inst.space.form, n_mat)
    )
    return linalg.is_zero_matrix(linalg.mat_sub(lhs, inst.space.form))
