"""Sparse multivariate polynomials over QQ or F_p.

A polynomial is a map from exponent tuples to nonzero coefficients.  All
instances are treated as immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Integral
from typing import Dict, Iterable, Sequence, Tuple

from .fields import QQ, DomainError, FpElement, GF, PrimeField, field_of

Exponent = Tuple[int, ...]

XYZT = ("x", "y", "z", "t")


def default_names(nvars: int) -> Tuple[str, ...]:
    if nvars == 4:
        return XYZT
    return tuple(f"x{i}" for i in range(nvars))


class MultiPoly:
    __slots__ = ("nvars", "terms", "field", "_hash")

    def __init__(self, nvars: int, terms: Dict[Exponent, object] | None = None, field=QQ, *, _trusted=False):
        self.nvars = nvars
        self.field = field
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = field(c)
            if c:
                if exps in clean:
                    c = clean[exps] + c
                    if not c:
                        del clean[exps]
                        continue
                clean[exps] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, field=QQ) -> MultiPoly:
        return cls(nvars, {}, field, _trusted=True)

    @classmethod
    def constant(cls, c, nvars: int, field=QQ) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def var(cls, i: int, nvars: int, field=QQ) -> MultiPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): field.one}, field, _trusted=True)

    @classmethod
    def linear(cls, coeffs: Sequence, field=QQ) -> MultiPoly:
        """The linear form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms, field)

    @classmethod
    def gens(cls, nvars: int, field=QQ) -> Tuple[MultiPoly, ...]:
        return tuple(cls.var(i, nvars, field) for i in range(nvars))

    # -- basic queries --------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def variables(self) -> Tuple[int, ...]:
        """Indices of variables that actually occur."""
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(sorted(used))

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), self.field.zero)

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self):
        """Terms in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-k for k in kv[0])))

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: MultiPoly):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if other.field != self.field:
            raise DomainError(f"coefficient domain mismatch: {self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (Integral, Fraction, FpElement)):
            if isinstance(other, FpElement) and self.field != GF(other.p):
                raise DomainError(f"cannot combine {self.field} polynomial with F_{other.p} scalar")
            if isinstance(other, Fraction) and isinstance(self.field, PrimeField):
                raise DomainError(f"cannot combine {self.field} polynomial with a rational scalar")
            return MultiPoly.constant(other, self.nvars, self.field)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return MultiPoly(self.nvars, out, self.field, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.field, _trusted=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> MultiPoly:
        c = self.field(c)
        if not c:
            return MultiPoly.zero(self.nvars, self.field)
        return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()}, self.field, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (Integral, Fraction, FpElement)):
            self._lift(other)
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return MultiPoly(self.nvars, {e: c for e, c in out.items() if c}, self.field, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        if isinstance(other, (Integral, Fraction, FpElement)):
            lifted = self._lift(other)
            return self.terms == lifted.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and evaluation ----------------------------------------

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [self.field(v) for v in point]
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(pt, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    __call__ = evaluate

    def partial(self, i: int) -> MultiPoly:
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                d = list(e)
                d[i] = k - 1
                dc = c * k
                if dc:
                    out[tuple(d)] = dc
        return MultiPoly(self.nvars, out, self.field, _trusted=True)

    def gradient(self) -> Tuple[MultiPoly, ...]:
        return tuple(self.partial(i) for i in range(self.nvars))

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Compose: replace x_i by images[i] (all images share one ring)."""
        if len(images) != self.nvars:
            raise ValueError(f"need {self.nvars} images, got {len(images)}")
        target = images[0]
        for im in images[1:]:
            target._check(im)
        if target.field != self.field:
            raise DomainError(f"coefficient domain mismatch: {self.field} vs {target.field}")
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] if k == 1 else power(i, k - 1) * images[i]
            return powers[key]

        result = MultiPoly.zero(target.nvars, self.field)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, target.nvars, self.field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # -- change of coefficient domain ----------------------------------

    def reduce(self, p: int) -> MultiPoly:
        """Image in F_p[x]; raises ZeroDivisionError if p divides a denominator."""
        if isinstance(self.field, PrimeField):
            if self.field.p != p:
                raise DomainError(f"cannot reduce an {self.field} polynomial mod {p}")
            return self
        F = GF(p)
        return MultiPoly(self.nvars, {e: F(c) for e, c in self.terms.items()}, F)

    def homogeneous_part(self, d: int) -> MultiPoly:
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}, self.field, _trusted=True)

    def is_multiple_of(self, other: MultiPoly) -> bool:
        """True when self = c * other for a scalar c (zero counts as a multiple)."""
        self._check(other)
        if not self.terms:
            return True
        if not other.terms or set(self.terms) != set(other.terms):
            return False
        e0 = next(iter(other.terms))
        ratio = self.terms[e0] / other.terms[e0]
        return all(self.terms[e] == ratio * c for e, c in other.terms.items())

    # -- text form ------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = tuple(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            neg = _is_negative(c)
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, nvars={self.nvars}, field={self.field!r})"

    @classmethod
    def from_text(cls, text: str, names: Sequence[str] | None = None, nvars: int | None = None, field=QQ) -> MultiPoly:
        if names is None:
            if nvars is None:
                raise ValueError("need variable names or a variable count")
            names = default_names(nvars)
        names = tuple(names)
        index = {n: i for i, n in enumerate(names)}
        n = len(names)
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls.zero(n, field)
        if s[0] not in "+-":
            s = "+" + s
        terms: Dict[Exponent, object] = {}
        for sign, body in _TERM_RE.findall(s):
            coeff = Fraction(1)
            e = [0] * n
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"malformed term {body!r}")
                if factor[0].isdigit():
                    coeff *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in index:
                    raise ValueError(f"unknown variable {name!r}")
                e[index[name]] += int(power) if power else 1
            if sign == "-":
                coeff = -coeff
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coeff
        if "".join(sign + body for sign, body in _TERM_RE.findall(s)) != s:
            raise ValueError(f"could not parse polynomial {text!r}")
        return cls(n, terms, field)


_TERM_RE = re.compile(r"([+-])([^+-]+)")


def _is_negative(c) -> bool:
    if isinstance(c, FpElement):
        return False
    return c < 0


def monomials(nvars: int, degree: int) -> list:
    """All exponent vectors of the given total degree, graded-lex descending."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=lambda e: tuple(-k for k in e))
    return out


def _univariate_coeffs(p: MultiPoly, var: int) -> list:
    coeffs = [p.field.zero] * (p.degree() + 1 if p else 0)
    for e, c in p.terms.items():
        coeffs[e[var]] = c
    return coeffs


def _strip(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _poly_rem(a: list, b: list) -> list:
    a = list(a)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        q = a[-1] * inv_lead
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - q * bc
        a.pop()
        _strip(a)
    return a


def gcd_univariate(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd of two polynomials that involve at most one common variable."""
    a._check(b)
    used = set(a.variables()) | set(b.variables())
    if len(used) > 1:
        raise ValueError(f"gcd_univariate needs univariate input, got variables {sorted(used)}")
    var = used.pop() if used else 0
    x = _univariate_coeffs(a, var)
    y = _univariate_coeffs(b, var)
    while y:
        x, y = y, _poly_rem(x, y)
    if not x:
        return MultiPoly.zero(a.nvars, a.field)
    lead = x[-1]
    terms = {}
    for k, c in enumerate(x):
        if c:
            e = [0] * a.nvars
            e[var] = k
            terms[tuple(e)] = c / lead
    return MultiPoly(a.nvars, terms, a.field)


def as_field_poly(p: MultiPoly, field) -> MultiPoly:
    """Move a polynomial into another field (QQ -> F_p reduction or identity)."""
    if p.field == field:
        return p
    if isinstance(field, PrimeField):
        return p.reduce(field.p)
    raise DomainError(f"cannot lift {p.field} polynomial to {field}")


def poly_matrix_eval(rows: Iterable[Sequence[MultiPoly]], point: Sequence) -> list:
    return [[entry.evaluate(point) for entry in row] for row in rows]


__all__ = [
    "MultiPoly",
    "monomials",
    "gcd_univariate",
    "default_names",
    "as_field_poly",
    "poly_matrix_eval",
    "field_of",
    "XYZT",
]
