"""Lines of P^5 in Pluecker coordinates and linear complexes as dual points."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .algebra import QQ, FpElement, field_of, is_proportional
from .skew import PAIR_INDEX, PAIRS, SkewConst

SPECIAL_TYPES = {6: "general", 4: "special-first-type", 2: "special-second-type", 0: "zero"}


class ProportionalPointsError(ValueError):
    pass


def plucker_relations(p: Sequence) -> list:
    """The 15 quadratic relations p_ij p_kl - p_ik p_jl + p_il p_jk, i<j<k<l."""
    def c(i, j):
        return p[PAIR_INDEX[(i, j)]]

    return [c(i, j) * c(k, l) - c(i, k) * c(j, l) + c(i, l) * c(j, k) for i, j, k, l in combinations(range(6), 4)]


def wedge(P: Sequence, R: Sequence) -> tuple:
    return tuple(P[i] * R[j] - P[j] * R[i] for i, j in PAIRS)


@dataclass(frozen=True, eq=False)
class PluckerLine:
    """A line of P^5; equality is projective."""

    p: Tuple
    points: Optional[Tuple[tuple, tuple]] = None

    def __post_init__(self):
        if len(self.p) != 15:
            raise ValueError("a line has 15 Pluecker coordinates")
        F = _common_field(self.p)
        object.__setattr__(self, "p", tuple(F(v) for v in self.p))
        if not any(self.p):
            raise ValueError("Pluecker coordinates cannot all vanish")
        if self.points is None:
            object.__setattr__(self, "points", spanning_points(self.p))

    @property
    def field(self):
        return field_of(self.p[0])

    def __eq__(self, other):
        if not isinstance(other, PluckerLine):
            return NotImplemented
        return is_proportional(self.p, other.p)

    def normalized(self) -> tuple:
        lead = next(v for v in self.p if v)
        return tuple(v / lead for v in self.p)

    def __hash__(self):
        return hash(self.normalized())

    def to_json(self) -> dict:
        return {"p": [str(v) for v in self.p]}

    @classmethod
    def from_json(cls, data: dict) -> PluckerLine:
        return cls(tuple(QQ(str(v)) for v in data["p"]))


def _common_field(values):
    for v in values:
        if isinstance(v, FpElement):
            return field_of(v)
    return QQ


def spanning_points(p: Sequence) -> Tuple[tuple, tuple]:
    """Recover two points spanning the line with coordinates p.

    Raises ValueError when p is not decomposable (not a line).
    """
    k = next(i for i, v in enumerate(p) if v)
    i, j = PAIRS[k]
    zero = p[k] * 0

    def row(a):
        out = []
        for b in range(6):
            if a == b:
                out.append(zero)
            elif a < b:
                out.append(p[PAIR_INDEX[(a, b)]])
            else:
                out.append(-p[PAIR_INDEX[(b, a)]])
        return tuple(out)

    # contracting the bivector with the dual basis vectors e_j*, e_i* gives
    # two points of the line whose wedge is p_ij * p
    P, R = tuple(-v for v in row(j)), row(i)
    if not is_proportional(wedge(P, R), p):
        raise ValueError("coordinates do not satisfy the Pluecker relations")
    return P, R


def line_from_points(P: Sequence, R: Sequence) -> PluckerLine:
    if len(P) != 6 or len(R) != 6:
        raise ValueError("points of P^5 have 6 coordinates")
    F = _common_field(list(P) + list(R))
    P, R = [F(v) for v in P], [F(v) for v in R]
    p = wedge(P, R)
    if not any(p):
        raise ProportionalPointsError("points are proportional; they do not span a line")
    return PluckerLine(p, (tuple(P), tuple(R)))


def complex_contains_line(c: SkewConst, line: PluckerLine) -> bool:
    """Whether sum a_ij p_ij vanishes."""
    F = c.field
    total = F.zero
    for a, q in zip(c.upper, line.p):
        if a:
            total = total + a * q
    return not total


def singular_space(c: SkewConst):
    """Rank of the complex and a basis of its kernel (the centres)."""
    rank, kernel = c.rank_kernel()
    if rank % 2:
        raise AssertionError(f"odd rank {rank} for a skew matrix")
    return rank, kernel


def complex_type(c: SkewConst) -> str:
    return SPECIAL_TYPES[singular_space(c)[0]]


__all__ = [
    "PluckerLine",
    "ProportionalPointsError",
    "plucker_relations",
    "wedge",
    "spanning_points",
    "line_from_points",
    "complex_contains_line",
    "singular_space",
    "complex_type",
]
