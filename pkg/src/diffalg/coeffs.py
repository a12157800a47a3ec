"""Coefficient fields: the rationals and rational functions of x.

Coefficients of difference polynomials are either ``fractions.Fraction``
(the field Q, fixed by the shift) or :class:`RatFunc` (the field Q(x),
where the shift acts by x -> x+1).  ``RatFunc`` values that happen to be
rational collapse to ``Fraction`` when stored in polynomials, so equality
between the two worlds is seamless.

Univariate polynomials in x are kept as dense tuples of ``Fraction``
coefficients, ascending degree, with no trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Union

XPoly = tuple  # tuple[Fraction, ...], ascending, no trailing zeros

X_ZERO: XPoly = ()
X_ONE: XPoly = (Fraction(1),)


def xpoly(coeffs) -> XPoly:
    """Build a normalized x-polynomial from an iterable of numbers."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def xp_add(a: XPoly, b: XPoly) -> XPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return xpoly(out)


def xp_neg(a: XPoly) -> XPoly:
    return tuple(-c for c in a)


def xp_sub(a: XPoly, b: XPoly) -> XPoly:
    return xp_add(a, xp_neg(b))


def xp_mul(a: XPoly, b: XPoly) -> XPoly:
    if not a or not b:
        return X_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return xpoly(out)


def xp_scale(a: XPoly, c: Fraction) -> XPoly:
    if c == 0:
        return X_ZERO
    return tuple(ci * c for ci in a)


def xp_divmod(a: XPoly, b: XPoly) -> tuple[XPoly, XPoly]:
    """Euclidean division over Q; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("division by zero x-polynomial")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        if c == 0:
            continue
        quo[k] = c
        for i, bc in enumerate(b):
            rem[k + i] -= c * bc
    return xpoly(quo), xpoly(rem)


def xp_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Monic gcd over Q."""
    while b:
        a, b = b, xp_divmod(a, b)[1]
    if not a:
        return X_ZERO
    return xp_scale(a, 1 / a[-1])


def xp_shift(a: XPoly, k: int) -> XPoly:
    """Substitute x -> x + k (the k-fold transform of a coefficient)."""
    if k == 0 or not a:
        return a
    # Horner: p(x+k) built from the top coefficient down.
    step = (Fraction(k), Fraction(1))
    out: XPoly = X_ZERO
    for c in reversed(a):
        out = xp_add(xp_mul(out, step), (c,) if c else X_ZERO)
    return out


def xp_str(a: XPoly) -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            xs = "x" if i == 1 else f"x^{i}"
            body = xs if abs(c) == 1 else f"{abs(c)}*{xs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


class RatFunc:
    """A reduced fraction of x-polynomials over Q, with monic denominator.

    Supports mixed arithmetic with ``int`` and ``Fraction``; those coerce
    to constant rational functions.  Values are immutable and hashable,
    and a constant ``RatFunc`` compares (and hashes) equal to the
    corresponding ``Fraction``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=X_ONE):
        if not isinstance(num, tuple):
            num = xpoly(num) if not isinstance(num, (int, Fraction)) else xpoly([num])
        if not isinstance(den, tuple):
            den = xpoly(den) if not isinstance(den, (int, Fraction)) else xpoly([den])
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        g = xp_gcd(num, den)
        if g and g != X_ONE:
            num = xp_divmod(num, g)[0]
            den = xp_divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = xp_scale(num, 1 / lead)
            den = xp_scale(den, 1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def x() -> "RatFunc":
        return RatFunc((Fraction(0), Fraction(1)))

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(xpoly([other]))
        return None

    def is_rational(self) -> bool:
        return len(self.num) <= 1 and self.den == X_ONE

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational number")
        return self.num[0] if self.num else Fraction(0)

    def shift(self, k: int = 1) -> "RatFunc":
        if k == 0:
            return self
        return RatFunc(xp_shift(self.num, k), xp_shift(self.den, k))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.as_fraction())
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFunc":
        return RatFunc(xp_neg(self.num), self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(
            xp_add(xp_mul(self.num, o.den), xp_mul(o.num, self.den)),
            xp_mul(self.den, o.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(xp_mul(self.num, o.num), xp_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(xp_mul(self.num, o.den), xp_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(X_ONE) / self ** (-e)
        out = RatFunc(X_ONE)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self) -> str:
        if self.den == X_ONE:
            return xp_str(self.num)
        return f"({xp_str(self.num)})/({xp_str(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


Coeff = Union[Fraction, RatFunc]


def as_coeff(value) -> Coeff:
    """Normalize a number-like value to a canonical coefficient."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, RatFunc):
        return value.as_fraction() if value.is_rational() else value
    raise TypeError(f"cannot use {value!r} as a coefficient")


def shift_coeff(c: Coeff, k: int) -> Coeff:
    """Apply the shift automorphism k times (identity on Q)."""
    if isinstance(c, RatFunc):
        return as_coeff(c.shift(k))
    return c


def coeff_is_negative(c: Coeff) -> bool:
    """Sign used by the printer and the canonical sign convention: for a
    rational function, the sign of the leading numerator coefficient."""
    if isinstance(c, RatFunc):
        return bool(c.num) and c.num[-1] < 0
    return c < 0


def rational_content(values) -> Fraction:
    """gcd of a collection of nonzero rationals, as a positive Fraction."""
    num = 0
    den = 1
    for v in values:
        num = _int_gcd(num, v.numerator)
        den = den * v.denominator // _int_gcd(den, v.denominator)
    return Fraction(num, den) if num else Fraction(0)
