"""6x6 skew-symmetric matrices, constant and with linear-form entries.

A constant skew matrix stores only its 15 upper-triangular entries, in
the order (0,1), (0,2), ..., (4,5).  A :class:`SkewPencil` is the matrix
``x*A + y*B + z*C + t*D`` of linear forms in four variables.

Pfaffian convention: expansion along the first row,
``pf(M) = sum_{j>0} (-1)**(j+1) * M[0][j] * pf(M without rows/cols 0, j)``
with 0-based ``j`` and ``pf`` of the empty matrix equal to 1.  Under this
convention ``pf [[0, a], [-a, 0]] = a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .algebra import QQ, MultiPoly, determinant, field_of, matmul, rank_kernel, transpose

N = 6
PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(N), 2))
PAIR_INDEX = {pair: k for k, pair in enumerate(PAIRS)}

# pf([[0, N], [-N^T, 0]]) = BLOCK_SIGN * det(N) for 3x3 blocks N.
BLOCK_SIGN = -1


class SingularMatrixError(ValueError):
    pass


def pfaffian(matrix: Sequence[Sequence], zero, one):
    """Pfaffian of a skew matrix with entries in any commutative ring."""
    n = len(matrix)
    memo: Dict[tuple, object] = {}

    def pf(idx: tuple):
        if not idx:
            return one
        if len(idx) % 2:
            return zero
        if idx in memo:
            return memo[idx]
        i = idx[0]
        total = zero
        for k in range(1, len(idx)):
            entry = matrix[i][idx[k]]
            if not entry:
                continue
            term = entry * pf(idx[1:k] + idx[k + 1:])
            total = total + term if k % 2 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def _check_skew(matrix: Sequence[Sequence]):
    n = len(matrix)
    for i in range(n):
        if len(matrix[i]) != n:
            raise ValueError("skew matrix must be square")
        if matrix[i][i]:
            raise ValueError(f"nonzero diagonal entry at ({i}, {i})")
        for j in range(i + 1, n):
            if matrix[i][j] != -matrix[j][i]:
                raise ValueError(f"matrix is not skew at ({i}, {j})")


@dataclass(frozen=True)
class SkewConst:
    """A constant 6x6 skew matrix; also the dual coordinates of a linear complex."""

    upper: Tuple

    def __post_init__(self):
        if len(self.upper) != len(PAIRS):
            raise ValueError(f"need {len(PAIRS)} upper entries, got {len(self.upper)}")
        field = field_of(self.upper[0]) if self.upper else QQ
        object.__setattr__(self, "upper", tuple(field(v) for v in self.upper))

    @classmethod
    def from_entries(cls, entries: Dict[Tuple[int, int], object], field=QQ) -> SkewConst:
        upper = [field.zero] * len(PAIRS)
        for (i, j), v in entries.items():
            if i == j:
                raise ValueError("diagonal entries of a skew matrix are zero")
            if i > j:
                i, j, v = j, i, -field(v)
            upper[PAIR_INDEX[(i, j)]] = field(v)
        return cls(tuple(upper))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence]) -> SkewConst:
        _check_skew(matrix)
        return cls(tuple(matrix[i][j] for i, j in PAIRS))

    @classmethod
    def zero(cls, field=QQ) -> SkewConst:
        return cls((field.zero,) * len(PAIRS))

    @property
    def field(self):
        return field_of(self.upper[0])

    def entry(self, i: int, j: int):
        if i == j:
            return self.field.zero
        if i < j:
            return self.upper[PAIR_INDEX[(i, j)]]
        return -self.upper[PAIR_INDEX[(j, i)]]

    def matrix(self) -> List[list]:
        return [[self.entry(i, j) for j in range(N)] for i in range(N)]

    def pfaffian(self):
        F = self.field
        return pfaffian(self.matrix(), F.zero, F.one)

    def rank_kernel(self):
        return rank_kernel(self.matrix(), self.field)

    def rank(self) -> int:
        r = self.rank_kernel()[0]
        assert r % 2 == 0, "skew matrices have even rank"
        return r

    def is_zero(self) -> bool:
        return not any(self.upper)

    def reduce(self, p: int) -> SkewConst:
        from .algebra import GF

        F = GF(p)
        return SkewConst(tuple(F(v) for v in self.upper))

    def __add__(self, other: SkewConst) -> SkewConst:
        return SkewConst(tuple(a + b for a, b in zip(self.upper, other.upper)))

    def scale(self, c) -> SkewConst:
        return SkewConst(tuple(c * v for v in self.upper))

    def bilinear(self, u: Sequence, v: Sequence):
        """The alternating form u^T M v."""
        total = self.field.zero
        for (i, j), a in zip(PAIRS, self.upper):
            if a:
                total = total + a * (u[i] * v[j] - u[j] * v[i])
        return total

    def to_json(self) -> dict:
        return {"upper": [str(v) for v in self.upper]}

    @classmethod
    def from_json(cls, data: dict) -> SkewConst:
        upper = data["upper"]
        if len(upper) != len(PAIRS):
            raise ValueError(f"'upper' must have {len(PAIRS)} entries")
        return cls(tuple(QQ(str(v)) for v in upper))


@dataclass(frozen=True)
class SkewPencil:
    """x*A + y*B + z*C + t*D as a 6x6 skew matrix of linear forms."""

    A: SkewConst
    B: SkewConst
    C: SkewConst
    D: SkewConst

    @property
    def coefficients(self) -> Tuple[SkewConst, SkewConst, SkewConst, SkewConst]:
        return (self.A, self.B, self.C, self.D)

    @property
    def field(self):
        return self.A.field

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[MultiPoly]]) -> SkewPencil:
        """Read coefficient matrices off a skew matrix of linear forms in 4 variables."""
        _check_skew(matrix)
        field = next(e.field for row in matrix for e in row)
        coeffs = []
        for k in range(4):
            e = [0, 0, 0, 0]
            e[k] = 1
            coeffs.append({})
            for i, j in PAIRS:
                coeffs[k][(i, j)] = matrix[i][j].coefficient(e)
        for i, j in PAIRS:
            entry = matrix[i][j]
            if entry.nvars != 4 or (entry and (entry.degree() != 1 or not entry.is_homogeneous())):
                raise ValueError(f"entry ({i}, {j}) is not a linear form in 4 variables: {entry}")
        return cls(*(SkewConst.from_entries(c, field) for c in coeffs))

    def matrix(self) -> List[List[MultiPoly]]:
        F = self.field
        out = [[MultiPoly.zero(4, F) for _ in range(N)] for _ in range(N)]
        for i, j in PAIRS:
            form = MultiPoly.linear([M.entry(i, j) for M in self.coefficients], F)
            out[i][j] = form
            out[j][i] = -form
        return out

    def evaluate(self, point: Sequence) -> SkewConst:
        F = self.field
        x = [F(v) for v in point]
        return SkewConst(tuple(
            sum((c * M.upper[k] for c, M in zip(x, self.coefficients)), F.zero)
            for k in range(len(PAIRS))
        ))

    def pfaffian(self) -> MultiPoly:
        F = self.field
        pf = pfaffian(self.matrix(), MultiPoly.zero(4, F), MultiPoly.constant(1, 4, F))
        assert pf.is_zero() or (pf.is_homogeneous() and pf.degree() == 3)
        return pf

    def sub_pfaffians4(self) -> List[MultiPoly]:
        """Pfaffians of the 15 principal 4x4 submatrices, indexed by the deleted pair."""
        return principal_pfaffians4(self.matrix())

    def reduce(self, p: int) -> SkewPencil:
        return SkewPencil(*(M.reduce(p) for M in self.coefficients))

    def coefficient_span_rank(self) -> int:
        return rank_kernel([list(M.upper) for M in self.coefficients], self.field)[0]

    def to_json(self) -> dict:
        return {name: M.to_json() for name, M in zip("ABCD", self.coefficients)}

    @classmethod
    def from_json(cls, data: dict) -> SkewPencil:
        missing = [k for k in "ABCD" if k not in data]
        if missing:
            raise ValueError(f"missing coefficient matrices {missing}")
        return cls(*(SkewConst.from_json(data[k]) for k in "ABCD"))


def principal_pfaffians4(matrix: Sequence[Sequence[MultiPoly]]) -> List[MultiPoly]:
    nvars = matrix[0][1].nvars
    F = matrix[0][1].field
    zero, one = MultiPoly.zero(nvars, F), MultiPoly.constant(1, nvars, F)
    out = []
    for dropped in PAIRS:
        keep = [k for k in range(N) if k not in dropped]
        sub = [[matrix[a][b] for b in keep] for a in keep]
        out.append(pfaffian(sub, zero, one))
    return out


def pfaffian6(m):
    """Pfaffian of a SkewConst (scalar), a SkewPencil, or a full matrix of polynomials."""
    if isinstance(m, (SkewConst, SkewPencil)):
        return m.pfaffian()
    sample = m[0][1]
    if isinstance(sample, MultiPoly):
        return pfaffian(m, MultiPoly.zero(sample.nvars, sample.field), MultiPoly.constant(1, sample.nvars, sample.field))
    F = field_of(sample)
    return pfaffian(m, F.zero, F.one)


def sub_pfaffians4(m: SkewPencil) -> List[MultiPoly]:
    return m.sub_pfaffians4()


def congruence(p: Sequence[Sequence], m: SkewConst) -> SkewConst:
    """The congruent matrix P^T M P."""
    F = m.field
    P = [[F(v) for v in row] for row in p]
    if len(P) != N or any(len(row) != N for row in P):
        raise ValueError("congruence needs a 6x6 matrix")
    if not determinant(P, F):
        raise SingularMatrixError("congruence by a singular matrix")
    return SkewConst.from_matrix(matmul(matmul(transpose(P), m.matrix()), P))


def skew_block(n: Sequence[Sequence[MultiPoly]]) -> List[List[MultiPoly]]:
    """The 6x6 skew matrix [[0, N], [-N^T, 0]] of a 3x3 matrix N."""
    zero = MultiPoly.zero(n[0][0].nvars, n[0][0].field)
    out = [[zero] * N for _ in range(N)]
    for i in range(3):
        for j in range(3):
            out[i][3 + j] = n[i][j]
            out[3 + j][i] = -n[i][j]
    return out


def block_from_3x3(n: Sequence[Sequence[MultiPoly]]) -> SkewPencil:
    return SkewPencil.from_matrix(skew_block(n))


def det3(n: Sequence[Sequence]):
    return (
        n[0][0] * (n[1][1] * n[2][2] - n[1][2] * n[2][1])
        - n[0][1] * (n[1][0] * n[2][2] - n[1][2] * n[2][0])
        + n[0][2] * (n[1][0] * n[2][1] - n[1][1] * n[2][0])
    )


def _full(entries: Dict[Tuple[int, int], MultiPoly], nvars: int = 4) -> List[List[MultiPoly]]:
    zero = MultiPoly.zero(nvars)
    out = [[zero] * N for _ in range(N)]
    for (i, j), v in entries.items():
        out[i][j] = v
        out[j][i] = -v
    return out


def _forms(nvars=4):
    return MultiPoly.gens(nvars)


def t1_matrix() -> List[List[MultiPoly]]:
    x0, x1, x2, x3 = _forms()
    return _full({
        (0, 1): -x0, (0, 4): x2, (0, 5): x1,
        (1, 2): -x0, (1, 3): x3, (1, 5): x2,
        (2, 3): x2, (2, 4): x3,
        (3, 4): x1,
    })


def t4_block() -> List[List[MultiPoly]]:
    x, y, z, t = _forms()
    return [[t, x, y], [y + z, -y, 2 * x + t], [y, MultiPoly.zero(4), x + y - z]]


def double_line_block(a=1, b=1, c=1, d=1, e=1, f=1) -> List[List[MultiPoly]]:
    x, y, z, t = _forms()
    zero = MultiPoly.zero(4)
    return [
        [e * x + f * y, b * x + d * y, a * x + c * y],
        [zero, -y, z],
        [-x, zero, t],
    ]


def quadric_plane_block(L: MultiPoly | None = None) -> List[List[MultiPoly]]:
    x, y, z, t = _forms()
    zero = MultiPoly.zero(4)
    if L is None:
        L = x + y + z + t
    return [[x, y, zero], [t, z, zero], [zero, zero, L]]


def three_planes_forms() -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
    x, y, z, t = _forms()
    return x + y, x + z, x + t


def three_planes_dependent(forms=None) -> List[List[MultiPoly]]:
    F, G, H = forms or three_planes_forms()
    return _full({(0, 3): F, (1, 4): G, (2, 5): H})


def three_planes_independent(forms=None) -> List[List[MultiPoly]]:
    F, G, H = forms or three_planes_forms()
    x = _forms()[0]
    return _full({(0, 3): F, (1, 4): G, (1, 5): x, (2, 5): H})


def elliptic_cone_matrix(c=2, symbolic: bool = False) -> List[List[MultiPoly]]:
    """Skew matrix whose pfaffian is the cone y^2 z = x(x-z)(x-cz).

    With ``symbolic=True`` the parameter c is a fifth variable.
    """
    nvars = 5 if symbolic else 4
    gens = MultiPoly.gens(nvars)
    x, y, z, t = gens[:4]
    cc = gens[4] if symbolic else MultiPoly.constant(c, 4)
    ell = (cc + 1) * x - cc * z
    return _full({
        (0, 1): x, (0, 2): t, (0, 3): y,
        (1, 4): y, (1, 5): y,
        (2, 3): x, (2, 4): -z,
        (3, 4): -ell, (3, 5): -ell,
        (4, 5): x,
    }, nvars)


def alpha1_matrix() -> List[List[MultiPoly]]:
    x, y, z, t = _forms()
    return _full({(1, 5): x, (2, 5): y, (3, 5): z, (4, 5): t})


def builtin_pencils(a=1, b=1, c_es=1, d=1, e=1, f=1, c=2, L: MultiPoly | None = None) -> Dict[str, SkewPencil]:
    """Skew pencils transcribed from the classical examples.

    ``a..f`` parameterize the double-line surface (``c_es`` is its third
    parameter, renamed to avoid clashing with the cone parameter ``c``),
    ``c`` is the elliptic-cone parameter and ``L`` the plane of the
    quadric-plus-plane surface.
    """
    return {
        "t1": SkewPencil.from_matrix(t1_matrix()),
        "t4": block_from_3x3(t4_block()),
        "alpha1-canonical": SkewPencil.from_matrix(alpha1_matrix()),
        "es2i": block_from_3x3(double_line_block(a, b, c_es, d, e, f)),
        "es2ii": block_from_3x3(quadric_plane_block(L)),
        "three-planes-dependent": SkewPencil.from_matrix(three_planes_dependent()),
        "three-planes-independent": SkewPencil.from_matrix(three_planes_independent()),
        "elliptic-cone": SkewPencil.from_matrix(elliptic_cone_matrix(c)),
    }


__all__ = [
    "PAIRS",
    "PAIR_INDEX",
    "BLOCK_SIGN",
    "SkewConst",
    "SkewPencil",
    "SingularMatrixError",
    "pfaffian",
    "pfaffian6",
    "sub_pfaffians4",
    "principal_pfaffians4",
    "congruence",
    "skew_block",
    "block_from_3x3",
    "det3",
    "builtin_pencils",
    "t1_matrix",
    "t4_block",
    "double_line_block",
    "quadric_plane_block",
    "three_planes_forms",
    "three_planes_dependent",
    "three_planes_independent",
    "elliptic_cone_matrix",
    "alpha1_matrix",
]
