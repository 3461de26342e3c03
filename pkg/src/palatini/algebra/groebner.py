"""Buchberger's algorithm over F_p in graded reverse lex order.

Only what the Hilbert-function computations need: homogeneous input,
top-reduction, the coprime-leading-monomial criterion and the normal
selection strategy.  Polynomials are dicts ``{exponent tuple: int mod p}``.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple

from .poly import MultiPoly, monomials

Exp = Tuple[int, ...]
Poly = Dict[Exp, int]


class GroebnerLimitError(RuntimeError):
    pass


def grevlex_key(e: Exp):
    return (sum(e), tuple(-v for v in reversed(e)))


def _lead(f: Poly) -> Exp:
    return max(f, key=grevlex_key)


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(f: Poly, p: int) -> Poly:
    inv = pow(f[_lead(f)], -1, p)
    return {e: c * inv % p for e, c in f.items()}


def _sub_multiple(f: Poly, g: Poly, shift: Exp, c: int, p: int) -> Poly:
    """f - c * x^shift * g, in place."""
    for e, v in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        w = (f.get(m, 0) - c * v) % p
        if w:
            f[m] = w
        else:
            f.pop(m, None)
    return f


def _top_reduce(f: Poly, basis: List[Poly], leads: List[Exp], p: int) -> Poly:
    f = dict(f)
    while f:
        lf = _lead(f)
        for g, lg in zip(basis, leads):
            if _divides(lg, lf):
                shift = tuple(x - y for x, y in zip(lf, lg))
                _sub_multiple(f, g, shift, f[lf], p)
                break
        else:
            return f
    return f


def _spoly(f: Poly, lf: Exp, g: Poly, lg: Exp, p: int) -> Poly:
    m = _lcm(lf, lg)
    out = {}
    _sub_multiple(out, f, tuple(x - y for x, y in zip(m, lf)), p - 1, p)
    return _sub_multiple(out, g, tuple(x - y for x, y in zip(m, lg)), 1, p)


def as_modp_dicts(polys: Iterable[MultiPoly], p: int) -> List[Poly]:
    out = []
    for f in polys:
        d = {e: int(c) for e, c in f.reduce(p).terms.items() if c}
        if d:
            out.append(d)
    return out


def groebner_mod_p(polys: Sequence[MultiPoly], p: int, max_size: int = 400) -> List[Poly]:
    """A (non-reduced) Groebner basis of the ideal generated by polys over F_p.

    Raises GroebnerLimitError when the basis grows beyond max_size.
    """
    basis: List[Poly] = []
    leads: List[Exp] = []
    pairs: List[Tuple[int, int]] = []

    def add(h: Poly):
        h = _monic(h, p)
        basis.append(h)
        leads.append(_lead(h))
        k = len(basis) - 1
        pairs.extend((i, k) for i in range(k))
        if len(basis) > max_size:
            raise GroebnerLimitError(f"basis exceeded {max_size} elements")

    for f in sorted(as_modp_dicts(polys, p), key=lambda f: grevlex_key(_lead(f))):
        h = _top_reduce(f, basis, leads, p)
        if h:
            add(h)
    while pairs:
        # normal strategy: smallest lcm first
        pairs.sort(key=lambda ij: grevlex_key(_lcm(leads[ij[0]], leads[ij[1]])), reverse=True)
        i, j = pairs.pop()
        li, lj = leads[i], leads[j]
        if all(not (x and y) for x, y in zip(li, lj)):
            continue  # coprime leading monomials reduce to zero
        h = _top_reduce(_spoly(basis[i], li, basis[j], lj, p), basis, leads, p)
        if h:
            add(h)
    return basis


def minimal_leading_monomials(basis: Sequence[Poly]) -> List[Exp]:
    leads = sorted({_lead(g) for g in basis}, key=grevlex_key)
    out: List[Exp] = []
    for m in leads:
        if not any(_divides(a, m) for a in out):
            out.append(m)
    return out


def standard_monomial_count(leads: Sequence[Exp], nvars: int, t: int) -> int:
    """Number of degree-t monomials outside the monomial ideal generated by leads."""
    if not leads:
        return comb(t + nvars - 1, nvars - 1)
    return sum(1 for m in monomials(nvars, t) if not any(_divides(a, m) for a in leads))


__all__ = [
    "GroebnerLimitError",
    "grevlex_key",
    "groebner_mod_p",
    "minimal_leading_monomials",
    "standard_monomial_count",
]
