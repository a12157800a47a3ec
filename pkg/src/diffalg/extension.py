"""Elements of a simple algebraic extension Q[t]/(m(t)).

Just enough arithmetic to evaluate polynomials at points whose
coordinates live in a quadratic (or higher) extension: addition,
multiplication and comparison with rationals.  The minimal polynomial is
a monic tuple of Fractions, constant term first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class ExtensionElement:
    __slots__ = ("coeffs", "minpoly")

    def __init__(self, coeffs: Sequence, minpoly: Sequence):
        mp = tuple(Fraction(c) for c in minpoly)
        if len(mp) < 2 or mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        cs = [Fraction(c) for c in coeffs]
        cs = self._reduce(cs, mp)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "minpoly", mp)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("ExtensionElement is immutable")

    @staticmethod
    def generator(minpoly: Sequence) -> "ExtensionElement":
        return ExtensionElement((0, 1), minpoly)

    @staticmethod
    def _reduce(cs: list, mp: tuple) -> list:
        deg = len(mp) - 1
        while len(cs) > deg:
            top = cs.pop()
            if top == 0:
                continue
            for i in range(deg):
                cs[len(cs) - deg + i] -= top * mp[i]
        while len(cs) < deg:
            cs.append(Fraction(0))
        return cs

    def _lift(self, other) -> "ExtensionElement | None":
        if isinstance(other, ExtensionElement):
            if other.minpoly != self.minpoly:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, (int, Fraction)):
            return ExtensionElement((Fraction(other),), self.minpoly)
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.minpoly))

    def __neg__(self) -> "ExtensionElement":
        return ExtensionElement([-c for c in self.coeffs], self.minpoly)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtensionElement(
            [a + b for a, b in zip(self.coeffs, o.coeffs)], self.minpoly
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        deg = len(self.minpoly) - 1
        out = [Fraction(0)] * (2 * deg - 1 if deg > 1 else 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return ExtensionElement(out, self.minpoly)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = ExtensionElement((1,), self.minpoly)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"ExtensionElement({self})"
