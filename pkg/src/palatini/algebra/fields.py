"""Coefficient fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field
elements are :class:`FpElement` instances carrying their modulus, so that
mixing two different characteristics raises instead of silently wrapping.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational

DEFAULT_PRIMES = (31991, 65521)


class DomainError(TypeError):
    """Raised when values from incompatible coefficient domains are combined."""


class FpElement:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise DomainError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, Integral):
            return int(other) % self.p
        if isinstance(other, Fraction):
            raise DomainError(f"cannot mix F_{self.p} and QQ values")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> FpElement:
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElement(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o, self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, Integral):
            return self.v == int(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} mod {self.p}"

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field QQ; elements are :class:`Fraction`."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, FpElement):
            raise DomainError("cannot lift an F_p element to QQ")
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, (Rational, Fraction)):
            return Fraction(x)
        raise DomainError(f"not an exact rational: {x!r}")

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, Integral))

    def random(self, rng: random.Random, bound: int = 5) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p for an odd prime p < 2**63."""

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or p >= 2**63 or not _is_probable_prime(p):
            raise ValueError(f"{p} is not an odd prime below 2**63")
        self.p = p
        self.characteristic = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def __call__(self, x) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise DomainError(f"cannot move F_{x.p} element into F_{self.p}")
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Integral):
            return FpElement(int(x), self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{self.p} divides the denominator of {x}")
            return FpElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise DomainError(f"cannot convert {x!r} into F_{self.p}")

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.p == self.p

    def random(self, rng: random.Random) -> FpElement:
        return FpElement(rng.randrange(self.p), self.p)

    def elements(self):
        return (FpElement(v, self.p) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x):
    """Return the field a scalar lives in (ints count as rationals)."""
    if isinstance(x, FpElement):
        return GF(x.p)
    if isinstance(x, (Fraction, Integral)):
        return QQ
    raise DomainError(f"not an exact scalar: {x!r}")


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
