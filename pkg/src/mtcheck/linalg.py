"""Exact linear algebra over the rationals.

Every routine works with ``fractions.Fraction`` (or plain ints, which are
accepted everywhere and never silently widened to floats).  Matrices are
immutable tuples of row tuples; vectors are tuples.  Rank uses a
fraction-free elimination after clearing row denominators, so integer
input stays integer throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Scalar = Fraction | int
Vector = tuple[Scalar, ...]
Matrix = tuple[Vector, ...]


def vector(entries) -> Vector:
    return tuple(Fraction(x) for x in entries)


def matrix(rows) -> Matrix:
    return tuple(vector(row) for row in rows)


def zeros(n_rows: int, n_cols: int) -> Matrix:
    row = (0,) * n_cols
    return tuple(row for _ in range(n_rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_dot(u: Vector, v: Vector) -> Scalar:
    return sum(a * b for a, b in zip(u, v, strict=True))


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(vec_dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(r, s) for r, s in zip(a, b, strict=True))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(r, s) for r, s in zip(a, b, strict=True))


def is_zero_matrix(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def _int_rows(m: Matrix) -> list[list[int]]:
    """Scale each row to integer entries (rank and det are row-scale robust
    only for rank; det callers clear denominators themselves)."""
    out = []
    for row in m:
        denom = 1
        for x in row:
            if isinstance(x, Fraction):
                denom = denom * x.denominator // gcd(denom, x.denominator)
        out.append([int(x * denom) for x in row])
    return out


def rank(m: Matrix) -> int:
    """Rank by fraction-free (Bareiss-style) elimination."""
    if not m or not m[0]:
        return 0
    rows = _int_rows(m)
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        piv = rows[r][c]
        # every trailing row must be updated, even with a zero in the pivot
        # column, or the later exact divisions by prev lose their guarantee
        for i in range(r + 1, n_rows):
            factor = rows[i][c]
            rows[i] = [(piv * rows[i][k] - factor * rows[r][k]) // prev
                       for k in range(n_cols)]
        prev = piv
        r += 1
        if r == n_rows:
            break
    return r


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot column indices."""
    rows = [[Fraction(x) for x in row] for row in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def det(m: Matrix) -> Fraction:
    """Determinant by Bareiss elimination (exact)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    denom = Fraction(1)
    rows = []
    for row in m:
        scale = 1
        for x in row:
            if isinstance(x, Fraction):
                scale = scale * x.denominator // gcd(scale, x.denominator)
        denom *= scale
        rows.append([int(x * scale) for x in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            rows[i] = [(rows[c][c] * rows[i][k] - rows[i][c] * rows[c][k]) // prev
                       for k in range(n)]
        prev = rows[c][c]
    return Fraction(sign * rows[n - 1][n - 1], 1) / denom


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = tuple(tuple(Fraction(x) for x in row) + tuple(identity(n)[i])
                for i, row in enumerate(m))
    red, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in red[:n])


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of a x = b, or None when inconsistent."""
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    aug = tuple(tuple(row) + (b[i],) for i, row in enumerate(a))
    red, pivots = rref(aug)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return tuple(x)


def nullspace(m: Matrix) -> tuple[Vector, ...]:
    """Basis of the right kernel."""
    if not m:
        return ()
    n_cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def row_space_contains(basis: Matrix, v: Vector) -> bool:
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    return rank(basis) == rank(basis + (v,))


def same_span(a: Matrix, b: Matrix) -> bool:
    ra = rank(a) if a else 0
    rb = rank(b) if b else 0
    if ra != rb:
        return False
    joint = tuple(a) + tuple(b)
    return (rank(joint) if joint else 0) == ra
