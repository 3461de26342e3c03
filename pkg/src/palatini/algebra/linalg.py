"""Exact dense linear algebra over QQ and F_p.

Matrices are plain nested sequences of scalars.  The generic routines work
with any exact field element (``Fraction`` or ``FpElement``); the ``*_mod_p``
routines run on numpy int64 arrays and are used for the large coefficient
matrices of Hilbert-function computations.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from .fields import GF, QQ, field_of

# products of two residues must fit in int64
NUMPY_PRIME_LIMIT = 2**31


def _infer_field(rows, field):
    if field is not None:
        return field
    for row in rows:
        for v in row:
            return field_of(v)
    return QQ


def rref(rows: Sequence[Sequence], field=None) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form and pivot columns (first-nonzero pivoting)."""
    field = _infer_field(rows, field)
    m = [[field(v) for v in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_kernel(rows: Sequence[Sequence], field=None, ncols: int | None = None) -> Tuple[int, List[list]]:
    """Rank and a kernel basis (right null space) of a matrix.

    The kernel basis is read off the reduced row echelon form, so it does
    not depend on the order of the input rows.
    """
    field = _infer_field(rows, field)
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty matrix")
        ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise ValueError("ragged matrix")
    reduced, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return len(pivots), basis


def rank(rows: Sequence[Sequence], field=None) -> int:
    if not rows:
        return 0
    return len(rref(rows, field)[1])


def determinant(rows: Sequence[Sequence], field=None):
    field = _infer_field(rows, field)
    m = [[field(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[list]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), start=0 * row[0]) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), start=0 * v[0]) for row in a]


def transpose(a: Sequence[Sequence]) -> List[list]:
    return [list(col) for col in zip(*a)]


def is_proportional(u: Sequence, v: Sequence) -> bool:
    """Projective equality of two vectors (both nonzero)."""
    return all(a * d == b * c for (a, b), (c, d) in _pairs(u, v))


def _pairs(u, v):
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            yield (u[i], u[j]), (v[i], v[j])


# -- numpy modular routines ------------------------------------------------


def rank_mod_p(a, p: int) -> int:
    """Rank over F_p of an integer matrix via vectorized elimination."""
    if p >= NUMPY_PRIME_LIMIT:
        return rank([[int(v) for v in row] for row in np.asarray(a).tolist()], GF(p))
    A = np.array(a, dtype=np.int64) % p
    if A.ndim != 2 or A.size == 0:
        return 0
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            f = A[below, c][:, None]
            A[below, c:] = (A[below, c:] - f * A[r, c:]) % p
        r += 1
    return r


def kernel_mod_p(a, p: int) -> np.ndarray:
    """Right null space basis over F_p, one vector per row of the result."""
    A = np.array(a, dtype=np.int64) % p
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - A[others, c][:, None] * A[r]) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        K[k, f] = 1
        for row, pc in enumerate(pivots):
            K[k, pc] = (-A[row, f]) % p
    return K


__all__ = [
    "rref",
    "rank_kernel",
    "rank",
    "determinant",
    "matmul",
    "matvec",
    "transpose",
    "is_proportional",
    "rank_mod_p",
    "kernel_mod_p",
]
