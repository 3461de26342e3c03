"""Riemann-Roch bookkeeping for the degree-7 Palatini scroll.

Formal classes are polynomials in K, H and c2 (c2 has weight 2) with
rational coefficients; integration contracts weight-3 monomials against
an :class:`IntersectionTable`.  Anything that is not a tabulated weight-3
monomial is an error rather than zero.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .algebra import MultiPoly

K, H, C2 = MultiPoly.gens(3)
WEIGHTS = (1, 1, 2)

# dimension counts used alongside the numerics
DIM_SKEW_PENCILS = 15 * 4  # 6x6 skew matrices of linear forms in 4 variables
DIM_GL6 = 36
DIM_WEB_GRASSMANNIAN = 4 * (14 - 3)  # G(3, 14)


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class IntersectionTable:
    H3: Fraction = Fraction(7)
    KH2: Fraction = Fraction(-8)
    K2H: Fraction = Fraction(7)
    K3: Fraction = Fraction(-2)
    Kc2: Fraction = Fraction(-24)
    c2H: Optional[Fraction] = Fraction(15)
    chi_O: Fraction = Fraction(1)
    rank: int = 2

    def lookup(self) -> Dict[Tuple[int, int, int], Fraction]:
        table = {
            (0, 3, 0): self.H3,
            (1, 2, 0): self.KH2,
            (2, 1, 0): self.K2H,
            (3, 0, 0): self.K3,
            (1, 0, 1): self.Kc2,
        }
        if self.c2H is not None:
            table[(0, 1, 1)] = self.c2H
        return table


PALATINI = IntersectionTable()


def weight(exps) -> int:
    return sum(w * e for w, e in zip(WEIGHTS, exps))


def integrate(cls: MultiPoly, table: IntersectionTable) -> Fraction:
    """Degree of a weight-3 class against the table."""
    lookup = table.lookup()
    total = Fraction(0)
    for e, c in cls.terms.items():
        if weight(e) != 3:
            raise TableError(f"monomial {e} has weight {weight(e)}, expected 3")
        if e not in lookup:
            raise TableError(f"monomial {e} is not in the intersection table")
        total += c * lookup[e]
    return total


def normal_classes():
    """n1, n2, n3 and c1 of the normal bundle / tangent bundle, as formal classes."""
    n1 = K + 6 * H
    n2 = 15 * H**2 + 6 * H * K + K**2 - C2
    n3 = MultiPoly.zero(3)  # rank-2 bundle
    c1 = -K
    return n1, n2, n3, c1


def chi_normal_summands(table: IntersectionTable = PALATINI) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    n1, n2, n3, c1 = normal_classes()
    c2 = C2
    s1 = integrate(Fraction(1, 6) * (n1**3 - 3 * n1 * n2 + 3 * n3), table)
    s2 = integrate(Fraction(1, 4) * c1 * (n1**2 - 2 * n2), table)
    s3 = integrate(Fraction(1, 12) * (c1**2 + c2) * n1, table)
    s4 = table.rank * table.chi_O
    return s1, s2, s3, Fraction(s4)


def chi_normal(table: IntersectionTable = PALATINI) -> Fraction:
    return sum(chi_normal_summands(table), Fraction(0))


def hilbert_coefficients(table: IntersectionTable = PALATINI) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients of s^3, s^2, s, 1 in chi(O_X(s))."""
    if table.c2H is None:
        raise TableError("c2H is needed for the linear coefficient")
    return (
        table.H3 / 6,
        -table.KH2 / 4,
        (table.K2H + table.c2H) / 12,
        table.chi_O,
    )


def hilbert_polynomial(table: IntersectionTable, s) -> Fraction:
    a3, a2, a1, a0 = hilbert_coefficients(table)
    s = Fraction(s)
    return a3 * s**3 + a2 * s**2 + a1 * s + a0


def rr_coefficients(table: IntersectionTable, linear=Fraction(11, 6), quadratic=Fraction(2)) -> Fraction:
    """Solve (K^2 H + c2 H)/12 = linear for c2 H, checking -K H^2 / 4 = quadratic."""
    if -table.KH2 / 4 != quadratic:
        raise TableError(f"-KH^2/4 = {-table.KH2 / 4}, expected {quadratic}")
    return 12 * Fraction(linear) - table.K2H


def degree(table: IntersectionTable = PALATINI) -> int:
    d = table.H3
    assert d == 6 * hilbert_coefficients(replace(table, c2H=table.c2H or Fraction(0)))[0]
    return int(d)


def derivation_text(table: IntersectionTable = PALATINI) -> str:
    n1, n2, _, c1 = normal_classes()
    names = ("K", "H", "c2")
    s = chi_normal_summands(table)
    c2h = rr_coefficients(replace(table, c2H=None))
    coeffs = hilbert_coefficients(replace(table, c2H=c2h))
    lines = [
        f"table: H^3={table.H3} KH^2={table.KH2} K^2H={table.K2H} K^3={table.K3} Kc2={table.Kc2} chi(O_X)={table.chi_O}",
        f"c2H from the linear Hilbert coefficient: {c2h}",
        f"n1 = {n1.to_text(names)}",
        f"n2 = {n2.to_text(names)}",
        "n3 = 0",
        f"c1 = {c1.to_text(names)}",
        f"n1^3 = {integrate(n1**3, table)}, n1*n2 = {integrate(n1 * n2, table)}",
        "summands: " + " + ".join(str(v) for v in s),
        f"chi(N) = {sum(s)}",
        "chi(O_X(t)) = " + " + ".join(f"{c}{m}" for c, m in zip(coeffs, ("*t^3", "*t^2", "*t", ""))),
        f"degree = {degree(table)}",
    ]
    return "\n".join(lines)


__all__ = [
    "IntersectionTable",
    "PALATINI",
    "TableError",
    "K",
    "H",
    "C2",
    "DIM_SKEW_PENCILS",
    "DIM_GL6",
    "DIM_WEB_GRASSMANNIAN",
    "integrate",
    "normal_classes",
    "chi_normal",
    "chi_normal_summands",
    "hilbert_coefficients",
    "hilbert_polynomial",
    "rr_coefficients",
    "degree",
    "derivation_text",
]
