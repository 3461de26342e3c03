"""Webs of linear complexes and the degeneracy locus of their centres.

A web is spanned by four skew matrices A, B, C, D.  Its centres form the
threefold X cut out by the 4x4 minors of the 4x6 matrix F whose k-th row
is ``(M_k x)^T``; its special members form the pfaffian cubic surface S in
the (x, y, z, t) space of the web.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import (
    GF,
    QQ,
    MultiPoly,
    gcd_univariate,
    groebner_mod_p,
    is_proportional,
    minimal_leading_monomials,
    monomials,
    rank_kernel,
    rank_mod_p,
    standard_monomial_count,
)
from .grass import PluckerLine, complex_contains_line, line_from_points
from .skew import PAIRS, SkewConst, SkewPencil

MAX_RETRIES = 32

# Onset of agreement between the Hilbert function of the minor ideal and
# 7/6 t^3 + 2 t^2 + 11/6 t + 1, measured on random integer webs.
HILBERT_WINDOW_START = 4


class DegenerateWebError(ValueError):
    """The four generators do not span a 3-dimensional web."""


class GenericityError(RuntimeError):
    """Random sampling kept landing on a degenerate locus."""


class NotOnScrollError(ValueError):
    """F(P) has full rank 4: P is not a centre of the web."""


class AmbiguousFiberError(ValueError):
    """F(P) has rank < 3: the fibre through P is not a single point."""


class DegeneratePointError(ValueError):
    """The C4 lines through the point do not form a single line."""


class WindowNotStabilizedError(ValueError):
    pass


@dataclass(frozen=True)
class Web:
    A: SkewConst
    B: SkewConst
    C: SkewConst
    D: SkewConst

    @property
    def generators(self) -> Tuple[SkewConst, SkewConst, SkewConst, SkewConst]:
        return (self.A, self.B, self.C, self.D)

    @property
    def field(self):
        return self.A.field

    @property
    def span_rank(self) -> int:
        return rank_kernel([list(M.upper) for M in self.generators], self.field)[0]

    @property
    def independent(self) -> bool:
        return self.span_rank == 4

    def require_independent(self):
        r = self.span_rank
        if r != 4:
            raise DegenerateWebError(f"generators span a space of dimension {r}, not 4")

    @classmethod
    def from_pencil(cls, pencil: SkewPencil) -> Web:
        return cls(*pencil.coefficients)

    def reduce(self, p: int) -> Web:
        return Web(*(M.reduce(p) for M in self.generators))

    def over(self, field) -> Web:
        if field == self.field:
            return self
        return self.reduce(field.p)

    def to_json(self) -> dict:
        return {name: M.to_json() for name, M in zip("ABCD", self.generators)}

    @classmethod
    def from_json(cls, data: dict) -> Web:
        if not isinstance(data, dict):
            raise ValueError("web JSON must be an object with keys A, B, C, D")
        missing = [k for k in "ABCD" if k not in data]
        if missing:
            raise ValueError(f"web JSON is missing {missing}")
        return cls(*(SkewConst.from_json(data[k]) for k in "ABCD"))


def pencil_of(w: Web) -> SkewPencil:
    return SkewPencil(*w.generators)


def pfaffian_cubic(w: Web) -> Optional[MultiPoly]:
    """The cubic form pf(xA+yB+zC+tD), or None when it vanishes identically."""
    pf = pencil_of(w).pfaffian()
    return pf if pf else None


# -- degeneracy system ----------------------------------------------------


@dataclass(frozen=True)
class DegeneracySystem:
    """The 4x6 matrix F of linear forms and its 15 maximal minors.

    ``minors[(i, j)]`` is the minor obtained by deleting columns i and j.
    """

    F: Tuple[Tuple[MultiPoly, ...], ...]
    minors: Dict[Tuple[int, int], MultiPoly]
    web: Optional[Web] = None

    def nonzero_minors(self) -> Dict[Tuple[int, int], MultiPoly]:
        return {k: m for k, m in self.minors.items() if m}

    def evaluate(self, point: Sequence) -> List[list]:
        """F at a point; a rational system is reduced first when the point lives over F_p."""
        field = field_of_point(point)
        if field != QQ and self.F[0][0].field == QQ:
            return [[e.reduce(field.p).evaluate(point) for e in row] for row in self.F]
        return [[e.evaluate(point) for e in row] for row in self.F]

    def rank_at(self, point: Sequence) -> int:
        values = self.evaluate(point)
        return rank_kernel(values, field_of_point(point))[0]


def field_of_point(point: Sequence):
    from .algebra import field_of

    for v in point:
        if not isinstance(v, int):
            return field_of(v)
    return QQ


def f_matrix(w: Web) -> List[List[MultiPoly]]:
    F = w.field
    return [
        [MultiPoly.linear([M.entry(j, i) for i in range(6)], F) for j in range(6)]
        for M in w.generators
    ]


def _det2(a, b, c, d):
    return a * d - b * c


def maximal_minors(F: Sequence[Sequence[MultiPoly]]) -> Dict[Tuple[int, int], MultiPoly]:
    """All 4x4 minors of a 4x6 matrix, keyed by the deleted column pair."""
    top = {(a, b): _det2(F[0][a], F[0][b], F[1][a], F[1][b]) for a, b in combinations(range(6), 2)}
    bottom = {(a, b): _det2(F[2][a], F[2][b], F[3][a], F[3][b]) for a, b in combinations(range(6), 2)}
    out = {}
    for deleted in PAIRS:
        cols = [c for c in range(6) if c not in deleted]
        total = MultiPoly.zero(F[0][0].nvars, F[0][0].field)
        # Laplace expansion along the first two rows
        for pos in combinations(range(4), 2):
            rest = tuple(k for k in range(4) if k not in pos)
            sign = (-1) ** (3 + pos[0] + 1 + pos[1] + 1)
            a = top[(cols[pos[0]], cols[pos[1]])]
            b = bottom[(cols[rest[0]], cols[rest[1]])]
            if a and b:
                term = a * b
                total = total + term if sign > 0 else total - term
        out[deleted] = total
    return out


def degeneracy_system(w: Web) -> DegeneracySystem:
    F = f_matrix(w)
    minors = maximal_minors(F)
    for m in minors.values():
        assert m.is_zero() or (m.is_homogeneous() and m.degree() == 4)
    return DegeneracySystem(tuple(tuple(row) for row in F), minors, w)


# -- scroll fibre -----------------------------------------------------------


def _f_at(w: Web, P: Sequence) -> List[list]:
    """F(P): rows M_k P."""
    F = w.field
    P = [F(v) for v in P]
    return [[sum((M.entry(j, i) * P[i] for i in range(6)), F.zero) for j in range(6)] for M in w.generators]


def scroll_fiber(w: Web, P: Sequence) -> tuple:
    """The unique (x, y, z, t) with (xA+yB+zC+tD) P = 0, for P on X with rank F(P) = 3."""
    w = w.over(field_of_point(P))
    rows = _f_at(w, P)
    r = rank_kernel(rows, w.field)[0]
    if r == 4:
        raise NotOnScrollError("F(P) has rank 4, so P is not on the degeneracy locus")
    if r < 3:
        raise AmbiguousFiberError(f"F(P) has rank {r}; the fibre is not a single point")
    # (x,y,z,t) F(P) = 0
    cols = [list(col) for col in zip(*rows)]
    _, kernel = rank_kernel(cols, w.field)
    return tuple(kernel[0])


# -- Hilbert function -----------------------------------------------------


def _reduced_terms(poly: MultiPoly, p: int) -> Dict[tuple, int]:
    return {e: int(c) for e, c in poly.reduce(p).terms.items()}


def hilbert_function_of(generators: Sequence[MultiPoly], t: int, p: int) -> int:
    """dim of degree-t forms minus dim of the degree-t part of the ideal, over F_p."""
    gens = [g for g in generators if g]
    nvars = generators[0].nvars
    total = comb(t + nvars - 1, nvars - 1)
    if not gens:
        return total
    cols = {e: k for k, e in enumerate(monomials(nvars, t))}
    rows = []
    for g in gens:
        d = g.degree()
        if d > t:
            continue
        terms = _reduced_terms(g, p)
        for m in monomials(nvars, t - d):
            row = {}
            for e, c in terms.items():
                row[cols[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    if not rows:
        return total
    mat = np.zeros((len(rows), total), dtype=np.int64)
    for i, row in enumerate(rows):
        idx = np.fromiter(row.keys(), dtype=np.int64)
        mat[i, idx] = np.fromiter(row.values(), dtype=np.int64)
    return total - rank_mod_p(mat, p)


def hilbert_function(sys: DegeneracySystem, t: int, p: int) -> int:
    if t < 4:
        raise ValueError("the minor ideal starts in degree 4; need t >= 4")
    return hilbert_function_of(list(sys.minors.values()), t, p)


def hilbert_values(sys: DegeneracySystem, ts: Sequence[int], p: int) -> Dict[int, int]:
    return {t: hilbert_function(sys, t, p) for t in ts}


def hilbert_values_groebner(sys: DegeneracySystem, ts: Sequence[int], p: int) -> Dict[int, int]:
    """Same numbers as hilbert_values, read off the leading-term ideal.

    One Groebner basis serves every t, so large t costs a monomial count
    instead of an elimination.
    """
    leads = minimal_leading_monomials(groebner_mod_p(list(sys.nonzero_minors().values()), p))
    return {t: standard_monomial_count(leads, 6, t) for t in ts}


def third_differences(values: Sequence[int]) -> List[int]:
    v = list(values)
    for _ in range(3):
        v = [b - a for a, b in zip(v, v[1:])]
    return v


def degree_from_hilbert(values: Sequence[int]) -> int:
    """Degree of a threefold from Hilbert-function values at consecutive t.

    With five or more values the third difference must agree across the
    overlapping windows.
    """
    if len(values) < 4:
        raise ValueError("need values at 4 consecutive t")
    diffs = third_differences(values)
    if len(set(diffs)) != 1:
        raise WindowNotStabilizedError(f"third differences {diffs} are not constant")
    return diffs[0]


def scroll_hilbert_polynomial(t):
    from fractions import Fraction

    return Fraction(7, 6) * t**3 + 2 * t**2 + Fraction(11, 6) * t + 1


# -- C4 lines and 4-secancy -----------------------------------------------


def line_of_C4_through(w: Web, Q: Sequence) -> PluckerLine:
    """The unique line through Q lying in every complex of the web."""
    F = field_of_point(Q)
    w = w.over(F)
    Q = [F(v) for v in Q]
    # rows Q^T M_k; these are -F(Q), so the kernel jumps exactly when Q is on X
    rows = [[sum((Q[i] * M.entry(i, j) for i in range(6)), F.zero) for j in range(6)] for M in w.generators]
    _, kernel = rank_kernel(rows, F)
    if len(kernel) != 2:
        raise DegeneratePointError(
            f"lines of the web through Q form a space of dimension {len(kernel) - 1}, expected 1"
        )
    R = next(v for v in kernel if not is_proportional(v, Q))
    line = line_from_points(Q, R)
    for M in w.generators:
        if not complex_contains_line(M, line):
            raise AssertionError("computed C4 line is not contained in a generator")
    return line


@dataclass(frozen=True)
class SecantResult:
    line: PluckerLine
    length: Optional[int]
    contained: bool
    restrictions: List[List[int]] = dc_field(default_factory=list, repr=False)


def _conv(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _sub(a, b, p):
    return [(x - y) % p for x, y in zip(a, b)]


def _add(a, b, p):
    return [(x + y) % p for x, y in zip(a, b)]


def restricted_minors(w: Web, Q: Sequence, R: Sequence, p: int) -> Dict[Tuple[int, int], List[int]]:
    """The 15 minors restricted to the line sQ + uR, as binary quartics.

    A binary form of degree d is the coefficient list of s^d, s^(d-1) u, ..., u^d.
    Restriction commutes with taking minors, so F(sQ+uR) = s F(Q) + u F(R) is
    expanded directly.
    """
    wp = w.over(GF(p))
    FQ = _f_at(wp, Q)
    FR = _f_at(wp, R)
    ent = [[[int(FQ[k][j]), int(FR[k][j])] for j in range(6)] for k in range(4)]

    def d2(r0, r1, a, b):
        return _sub(_conv(ent[r0][a], ent[r1][b], p), _conv(ent[r0][b], ent[r1][a], p), p)

    top = {(a, b): d2(0, 1, a, b) for a, b in combinations(range(6), 2)}
    bottom = {(a, b): d2(2, 3, a, b) for a, b in combinations(range(6), 2)}
    out = {}
    for deleted in PAIRS:
        cols = [c for c in range(6) if c not in deleted]
        total = [0] * 5
        for pos in combinations(range(4), 2):
            rest = tuple(k for k in range(4) if k not in pos)
            sign = (-1) ** (pos[0] + pos[1] + 1)
            term = _conv(top[(cols[pos[0]], cols[pos[1]])], bottom[(cols[rest[0]], cols[rest[1]])], p)
            total = _add(total, term, p) if sign > 0 else _sub(total, term, p)
        out[deleted] = total
    return out


def binary_gcd_degree(forms: Sequence[Sequence[int]], p: int) -> Optional[int]:
    """Degree of the gcd of nonzero binary forms over F_p; None if all vanish."""
    forms = [f for f in forms if any(f)]
    if not forms:
        return None
    F = GF(p)
    u_power = min(next(k for k, c in enumerate(f) if c) for f in forms)
    g = MultiPoly.zero(1, F)
    for f in forms:
        d = len(f) - 1
        # dehomogenize at u = 1: coefficient of s^(d-k) u^k goes to s^(d-k)
        dehom = MultiPoly(1, {(d - k,): c for k, c in enumerate(f) if c}, F)
        g = gcd_univariate(g, dehom)
    return g.degree() + u_power


def four_secant_check(w: Web, Q: Sequence, p: int) -> SecantResult:
    """Length of the intersection of X with the C4 line through Q."""
    F = GF(p)
    Q = [F(v) for v in Q]
    line = line_of_C4_through(w.reduce(p), Q)
    R = line.points[1]
    restr = restricted_minors(w, Q, R, p)
    length = binary_gcd_degree(list(restr.values()), p)
    return SecantResult(line, length, length is None, list(restr.values()))


# -- random sampling ------------------------------------------------------


def random_vector(field, rng: random.Random, n: int) -> list:
    for _ in range(MAX_RETRIES):
        v = [field.random(rng) for _ in range(n)]
        if any(v):
            return v
    raise GenericityError("could not draw a nonzero vector")


def random_web(rng: random.Random, bound: int = 5, require_cubic: bool = True) -> Web:
    """Random integer web with entries in [-bound, bound]."""
    for _ in range(MAX_RETRIES):
        gens = [SkewConst(tuple(QQ(rng.randint(-bound, bound)) for _ in PAIRS)) for _ in range(4)]
        w = Web(*gens)
        if not w.independent:
            continue
        if require_cubic and pfaffian_cubic(w) is None:
            continue
        return w
    raise GenericityError("could not draw an independent random web")


def univariate_roots_mod_p(coeffs: Sequence[int], p: int) -> List[int]:
    """All roots in F_p of sum coeffs[k] * s^k, by exhaustive evaluation."""
    s = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(list(coeffs)):
        acc = (acc * s + int(c)) % p
    return [int(v) for v in np.flatnonzero(acc == 0)]


def random_point_on_cubic(cubic: MultiPoly, rng: random.Random) -> list:
    """A random F_p-point of a cubic surface, from a random secant line."""
    F = cubic.field
    p = F.p
    lam = MultiPoly.var(0, 1, F)
    for _ in range(MAX_RETRIES):
        a = random_vector(F, rng, 4)
        b = random_vector(F, rng, 4)
        restricted = cubic.substitute([MultiPoly.constant(ai, 1, F) + bi * lam for ai, bi in zip(a, b)])
        if not restricted:
            continue
        coeffs = [0] * (restricted.degree() + 1)
        for (k,), c in restricted.terms.items():
            coeffs[k] = int(c)
        roots = univariate_roots_mod_p(coeffs, p)
        if roots:
            r = rng.choice(roots)
            point = [ai + r * bi for ai, bi in zip(a, b)]
            if any(point):
                return point
    raise GenericityError("no F_p-point found on the cubic")


def random_point_on_scroll(w: Web, p: int, rng: random.Random, cubic: MultiPoly | None = None) -> list:
    """A random F_p-point of X whose fibre point q has pencil rank 4."""
    wp = w.reduce(p)
    cubic = (cubic if cubic is not None else pfaffian_cubic(w)).reduce(p)
    pencil = pencil_of(wp)
    for _ in range(MAX_RETRIES):
        q = random_point_on_cubic(cubic, rng)
        r, kernel = pencil.evaluate(q).rank_kernel()
        if r != 4:
            continue
        F = GF(p)
        a, b = F.random(rng), F.random(rng)
        P = [a * u + b * v for u, v in zip(*kernel)]
        if any(P):
            return P
    raise GenericityError("no rank-4 point found on the cubic")


def random_generic_point(w: Web, p: int, rng: random.Random) -> list:
    """A random F_p-point of P^5 off X (so exactly one C4 line passes through it)."""
    wp = w.reduce(p)
    F = GF(p)
    for _ in range(MAX_RETRIES):
        Q = random_vector(F, rng, 6)
        if rank_kernel(_f_at(wp, Q), F)[0] == 4:
            return Q
    raise GenericityError("every sampled point landed on X")


__all__ = [
    "Web",
    "DegeneracySystem",
    "SecantResult",
    "DegenerateWebError",
    "GenericityError",
    "NotOnScrollError",
    "AmbiguousFiberError",
    "DegeneratePointError",
    "WindowNotStabilizedError",
    "HILBERT_WINDOW_START",
    "MAX_RETRIES",
    "pencil_of",
    "pfaffian_cubic",
    "f_matrix",
    "maximal_minors",
    "degeneracy_system",
    "scroll_fiber",
    "hilbert_function",
    "hilbert_function_of",
    "hilbert_values",
    "hilbert_values_groebner",
    "third_differences",
    "degree_from_hilbert",
    "scroll_hilbert_polynomial",
    "line_of_C4_through",
    "four_secant_check",
    "restricted_minors",
    "binary_gcd_degree",
    "random_vector",
    "random_web",
    "random_point_on_cubic",
    "random_point_on_scroll",
    "random_generic_point",
    "univariate_roots_mod_p",
]
