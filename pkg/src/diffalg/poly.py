"""Sparse difference polynomials.

A difference polynomial is a finite sum of terms ``coefficient *
monomial`` where the monomial is a product of shifted variables.  Two
kinds of variables exist: *main* variables ``y_j`` and *parameter*
variables ``u<block>_<j>`` (generic coefficients).  Every variable
carries a non-negative shift; the transform operator raises all shifts
by one and shifts coefficients (x -> x+1 over Q(x)).

Values are immutable; all operations are pure functions, so concurrent
reads are safe.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping, NamedTuple, Optional

from .coeffs import (
    Coeff,
    RatFunc,
    as_coeff,
    coeff_is_negative,
    shift_coeff,
)

NEG_INF = float("-inf")

MAIN = "main"
PARAM = "param"

# Parameter block reserved for the homogeneity-test indeterminate; never
# produced by the parser or the generic constructors.
LAMBDA_BLOCK = -1


class DiffVar(NamedTuple):
    """A shifted variable, identified by (kind, block, index, shift)."""

    kind: str
    block: Optional[int]
    index: int
    shift: int

    def shifted(self, k: int) -> "DiffVar":
        if k == 0:
            return self
        return self._replace(shift=self.shift + k)

    def identity(self) -> tuple:
        """The unshifted variable this is a transform of."""
        return (self.kind, self.block, self.index)

    def sort_key(self) -> tuple[int, int, int, int]:
        # Parameters sort before main variables; then (block, index, shift).
        return (
            0 if self.kind == PARAM else 1,
            self.block if self.block is not None else 0,
            self.index,
            self.shift,
        )

    def __str__(self) -> str:
        if self.kind == MAIN:
            base = f"y{self.index}"
        elif self.block == LAMBDA_BLOCK:
            base = "lam" if self.index == 0 else f"lam{self.index}"
        else:
            base = f"u{self.block}_{self.index}"
        return base if self.shift == 0 else f"{base}@{self.shift}"


VarIdentity = tuple


def main_var(index: int, shift: int = 0) -> DiffVar:
    return DiffVar(MAIN, None, index, shift)


def param_var(block: int, index: int, shift: int = 0) -> DiffVar:
    return DiffVar(PARAM, block, index, shift)


def lambda_var(shift: int = 0) -> DiffVar:
    return DiffVar(PARAM, LAMBDA_BLOCK, 0, shift)


def identity_key(ident: VarIdentity) -> tuple:
    kind, block, index = ident
    return (0 if kind == PARAM else 1, block if block is not None else 0, index)


class Monomial(tuple):
    """A product of shifted variables with positive integer exponents,
    stored as a tuple of (DiffVar, exponent) pairs sorted canonically.
    The empty monomial is 1."""

    __slots__ = ()

    @staticmethod
    def make(pairs: Iterable[tuple[DiffVar, int]]) -> "Monomial":
        merged: dict[DiffVar, int] = {}
        for v, e in pairs:
            if e:
                merged[v] = merged.get(v, 0) + e
        items = sorted(((v, e) for v, e in merged.items() if e), key=lambda t: t[0].sort_key())
        for _, e in items:
            if e < 0:
                raise ValueError("negative exponent in monomial")
        return Monomial(items)

    @staticmethod
    def of(v: DiffVar, e: int = 1) -> "Monomial":
        if e == 0:
            return ONE_MONOMIAL
        return Monomial(((v, e),))

    def degree(self) -> int:
        return sum(e for _, e in self)

    def deg_of(self, v: DiffVar) -> int:
        for w, e in self:
            if w == v:
                return e
        return 0

    def vars(self) -> Iterable[DiffVar]:
        return (v for v, _ in self)

    def mul(self, other: "Monomial") -> "Monomial":
        if not other:
            return self
        if not self:
            return other
        return Monomial.make(itertools.chain(self, other))

    def shifted(self, k: int) -> "Monomial":
        if k == 0:
            return self
        return Monomial(tuple((v.shifted(k), e) for v, e in self))

    def divides(self, other: "Monomial") -> bool:
        it = dict(other)
        return all(it.get(v, 0) >= e for v, e in self)

    def div(self, other: "Monomial") -> "Monomial":
        out = dict(self)
        for v, e in other:
            have = out.get(v, 0) - e
            if have < 0:
                raise ValueError(f"{other} does not divide {self}")
            if have:
                out[v] = have
            else:
                del out[v]
        return Monomial.make(out.items())

    def without(self, keep) -> "Monomial":
        return Monomial(tuple((v, e) for v, e in self if keep(v)))

    def __str__(self) -> str:
        if not self:
            return "1"
        parts = []
        for v, e in self:
            parts.append(str(v) if e == 1 else f"{v}^{e}")
        return "*".join(parts)


ONE_MONOMIAL = Monomial(())


def cmp_monomials(a: Monomial, b: Monomial) -> int:
    """Canonical graded-lex order: total degree first, then the earliest
    canonical variable with differing exponent decides (larger wins)."""
    da, db = a.degree(), b.degree()
    if da != db:
        return -1 if da < db else 1
    ia, ib = 0, 0
    while ia < len(a) and ib < len(b):
        va, ea = a[ia]
        vb, eb = b[ib]
        ka, kb = va.sort_key(), vb.sort_key()
        if ka < kb:
            return 1  # a has the more significant variable
        if kb < ka:
            return -1
        if ea != eb:
            return 1 if ea > eb else -1
        ia += 1
        ib += 1
    return 0


MONOMIAL_KEY = cmp_to_key(cmp_monomials)


class DiffPoly:
    """Immutable sparse difference polynomial: a map monomial -> nonzero
    coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                c = as_coeff(c)
                if c:
                    clean[m] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("DiffPoly is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "DiffPoly":
        return ZERO

    @staticmethod
    def one() -> "DiffPoly":
        return ONE

    @staticmethod
    def const(c) -> "DiffPoly":
        return DiffPoly({ONE_MONOMIAL: c})

    @staticmethod
    def var(v: DiffVar, e: int = 1) -> "DiffPoly":
        return DiffPoly({Monomial.of(v, e): Fraction(1)})

    @staticmethod
    def _raw(terms: dict[Monomial, Coeff]) -> "DiffPoly":
        p = object.__new__(DiffPoly)
        object.__setattr__(p, "terms", terms)
        return p

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        """True when no variable occurs (the value lies in the base field)."""
        return all(not m for m in self.terms)

    def constant_value(self) -> Coeff:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[ONE_MONOMIAL]

    def variables(self) -> set[DiffVar]:
        out: set[DiffVar] = set()
        for m in self.terms:
            out.update(m.vars())
        return out

    def identities(self) -> set[VarIdentity]:
        return {v.identity() for v in self.variables()}

    def total_degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def degree_in(self, v: DiffVar) -> int:
        return max((m.deg_of(v) for m in self.terms), default=0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, RatFunc)):
            other = DiffPoly.const(other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- ring operations ---------------------------------------------

    @staticmethod
    def _coerce(other) -> "DiffPoly | None":
        if isinstance(other, DiffPoly):
            return other
        if isinstance(other, (int, Fraction, RatFunc)):
            return DiffPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms:
            return o
        if not o.terms:
            return self
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = as_coeff(s)
            elif m in out:
                del out[m]
        return DiffPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly._raw({m: -c for m, c in self.terms.items()})

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
        if not self.terms or not o.terms:
            return ZERO
        out: dict[Monomial, Coeff] = {}
        small, large = (self.terms, o.terms) if len(self.terms) <= len(o.terms) else (o.terms, self.terms)
        for m1, c1 in small.items():
            for m2, c2 in large.items():
                m = m1.mul(m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = as_coeff(s)
                elif m in out:
                    del out[m]
        return DiffPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a coefficient-field element only."""
        if isinstance(other, DiffPoly):
            if not other.is_constant():
                raise ValueError("can only divide by a base-field element")
            other = other.constant_value()
        if isinstance(other, (int, Fraction, RatFunc)):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1, other) if isinstance(other, int) else 1 / other
            return DiffPoly({m: c * inv for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> "DiffPoly":
        c = as_coeff(c)
        if not c:
            return ZERO
        return DiffPoly._raw({m: as_coeff(cc * c) for m, cc in self.terms.items()})

    # -- difference structure -----------------------------------------

    def transform(self, k: int = 1) -> "DiffPoly":
        """Apply the shift endomorphism k times: every variable shift and
        every coefficient moves up by k."""
        if k < 0:
            raise ValueError("transform exponent must be non-negative")
        if k == 0 or not self.terms:
            return self
        return DiffPoly._raw(
            {m.shifted(k): shift_coeff(c, k) for m, c in self.terms.items()}
        )

    def order_in(self, ident: VarIdentity) -> Optional[int]:
        """Greatest shift of the given variable identity, or None."""
        best: Optional[int] = None
        for v in self.variables():
            if v.identity() == ident and (best is None or v.shift > best):
                best = v.shift
        return best

    def lord_in(self, ident: VarIdentity) -> Optional[int]:
        best: Optional[int] = None
        for v in self.variables():
            if v.identity() == ident and (best is None or v.shift < best):
                best = v.shift
        return best

    def order(self) -> int:
        """Greatest shift of any variable (0 for constants)."""
        return max((v.shift for v in self.variables()), default=0)

    # -- calculus-style operations -------------------------------------

    def partial(self, v: DiffVar) -> "DiffPoly":
        """Formal partial derivative, treating every shifted variable as
        an independent indeterminate."""
        out: dict[Monomial, Coeff] = {}
        for m, c in self.terms.items():
            e = m.deg_of(v)
            if not e:
                continue
            rest = Monomial.make([(w, k) for w, k in m if w != v] + [(v, e - 1)])
            s = out.get(rest)
            s = c * e if s is None else s + c * e
            if s:
                out[rest] = as_coeff(s)
            elif rest in out:
                del out[rest]
        return DiffPoly._raw(out)

    def coeffs_in(self, v: DiffVar) -> dict[int, "DiffPoly"]:
        """Coefficients of powers of one shifted variable."""
        out: dict[int, dict[Monomial, Coeff]] = {}
        for m, c in self.terms.items():
            e = m.deg_of(v)
            rest = m.without(lambda w: w != v)
            out.setdefault(e, {})[rest] = c
        return {e: DiffPoly._raw(t) for e, t in out.items()}

    def eval_vars(self, assignment: Mapping[DiffVar, object]) -> object:
        """Evaluate at a full assignment of the occurring variables.
        Values may be Fractions, RatFuncs, extension elements, or
        polynomials; they only need +, * and integer powers."""
        total = None
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                if v not in assignment:
                    raise KeyError(f"no value assigned to {v}")
                base = assignment[v]
                for _ in range(e):
                    val = val * base
            total = val if total is None else total + val
        return Fraction(0) if total is None else total

    # -- printing -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: MONOMIAL_KEY(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Coeff]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=MONOMIAL_KEY)
        return m, self.terms[m]

    def sort_token(self) -> tuple:
        """A deterministic total-order token, used only for tie-breaking."""
        return tuple(
            (tuple((v.sort_key(), e) for v, e in m), str(c)) for m, c in self.sorted_terms()
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            neg = coeff_is_negative(c)
            mag = -c if neg else c
            if isinstance(mag, RatFunc):
                cs = str(mag)
                if " " in cs:
                    cs = f"({cs})"
                if cs == "1":
                    cs = ""
            else:
                cs = "" if mag == 1 else str(mag)
            if not m:
                body = cs if cs else "1"
            elif cs:
                body = f"{cs}*{m}"
            else:
                body = str(m)
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f" - {body}" if neg else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"DiffPoly({self})"


ZERO = DiffPoly._raw({})
ONE = DiffPoly._raw({ONE_MONOMIAL: Fraction(1)})


# ---------------------------------------------------------------------
# Operations on difference polynomials
# ---------------------------------------------------------------------


def order_stats(p: DiffPoly, index: int) -> tuple:
    """(ord, lord, eord) of a main variable; all -inf when absent."""
    if p.is_zero():
        raise ValueError("order statistics of the zero polynomial")
    ident = (MAIN, None, index)
    o = p.order_in(ident)
    if o is None:
        return (NEG_INF, NEG_INF, NEG_INF)
    l = p.lord_in(ident)
    return (o, l, o - l)


def substitute(p: DiffPoly, bindings: Mapping[int, DiffPoly]) -> DiffPoly:
    """Simultaneously replace main variables by polynomials; an occurrence
    with shift k receives the k-th transform of its binding."""
    idents = {(MAIN, None, i): q for i, q in bindings.items()}
    return substitute_identities(p, idents)


def substitute_identities(p: DiffPoly, bindings: Mapping[VarIdentity, DiffPoly]) -> DiffPoly:
    if not bindings:
        return p
    cache: dict[DiffVar, DiffPoly] = {}
    total = ZERO
    for m, c in p.terms.items():
        term = DiffPoly.const(c)
        for v, e in m:
            ident = v.identity()
            if ident in bindings:
                rep = cache.get(v)
                if rep is None:
                    rep = bindings[ident].transform(v.shift)
                    cache[v] = rep
                term = term * rep**e
            else:
                term = term * DiffPoly.var(v, e)
        total = total + term
    return total


def substitute_ratio(
    p: DiffPoly, bindings: Mapping[int, tuple[DiffPoly, DiffPoly]]
) -> DiffPoly:
    """Substitute main variables by formal ratios N/D and clear
    denominators with the minimal shift-wise power of each D.

    Returns the numerator of the substituted expression.
    """
    # For each bound variable identity and shift k, the clearing power of
    # D^(k) is the largest total degree of that shifted variable across
    # the terms of p.
    caps: dict[tuple[int, int], int] = {}
    for m in p.terms:
        for v, e in m:
            if v.kind == MAIN and v.index in bindings:
                key = (v.index, v.shift)
                caps[key] = max(caps.get(key, 0), m.deg_of(v))
    num_cache: dict[tuple[int, int], DiffPoly] = {}
    den_cache: dict[tuple[int, int], DiffPoly] = {}

    def num_of(i: int, k: int) -> DiffPoly:
        if (i, k) not in num_cache:
            num_cache[(i, k)] = bindings[i][0].transform(k)
        return num_cache[(i, k)]

    def den_of(i: int, k: int) -> DiffPoly:
        if (i, k) not in den_cache:
            den_cache[(i, k)] = bindings[i][1].transform(k)
        return den_cache[(i, k)]

    total = ZERO
    for m, c in p.terms.items():
        term = DiffPoly.const(c)
        used: dict[tuple[int, int], int] = {}
        for v, e in m:
            if v.kind == MAIN and v.index in bindings:
                term = term * num_of(v.index, v.shift) ** e
                used[(v.index, v.shift)] = e
            else:
                term = term * DiffPoly.var(v, e)
        for (i, k), cap in caps.items():
            rem = cap - used.get((i, k), 0)
            if rem:
                term = term * den_of(i, k) ** rem
        total = total + term
    return total


def is_transformally_homogeneous(
    p: DiffPoly, block: Iterable[VarIdentity]
) -> tuple[bool, Optional[Monomial]]:
    """Test p(lam*y) = M(lam) * p(y) for the given variable identities,
    returning the monomial M when it exists."""
    idents = set(block)
    if p.is_zero():
        return (True, ONE_MONOMIAL)
    common: Optional[Monomial] = None
    for m in p.terms:
        lam_part: dict[DiffVar, int] = {}
        for v, e in m:
            if v.identity() in idents:
                lv = lambda_var(v.shift)
                lam_part[lv] = lam_part.get(lv, 0) + e
        mono = Monomial.make(lam_part.items())
        if common is None:
            common = mono
        elif common != mono:
            return (False, None)
    return (True, common)


def euler_weights(p: DiffPoly, block: Iterable[VarIdentity]) -> Optional[list[int]]:
    """Weights r_k with sum_j v_j^(k) dp/dv_j^(k) = r_k p over the block,
    or None when some Euler identity fails.  Agrees with
    :func:`is_transformally_homogeneous` on every input."""
    idents = set(block)
    if p.is_zero():
        return []
    top = max(
        (v.shift for v in p.variables() if v.identity() in idents), default=-1
    )
    out: list[int] = []
    for k in range(top + 1):
        s = ZERO
        for v in {v for v in p.variables() if v.identity() in idents and v.shift == k}:
            s = s + DiffPoly.var(v) * p.partial(v)
        r = _constant_multiple(s, p)
        if r is None or r != int(r) or r < 0:
            return None
        out.append(int(r))
    return out


def _constant_multiple(s: DiffPoly, p: DiffPoly) -> Optional[Fraction]:
    """The rational r with s = r*p, if one exists."""
    if s.is_zero():
        return Fraction(0)
    if len(s.terms) != len(p.terms):
        return None
    m = next(iter(p.terms))
    if m not in s.terms:
        return None
    ratio = s.terms[m] / p.terms[m]
    if isinstance(ratio, RatFunc):
        if not ratio.is_rational():
            return None
        ratio = ratio.as_fraction()
    return ratio if s == p.scale(ratio) else None


def denomination(p: DiffPoly) -> Monomial:
    """The monomial prod_i (y^(i))^{deg(p, y^(i))} attached to a
    difference polynomial in a single main variable."""
    idents = {v.identity() for v in p.variables() if v.kind == MAIN}
    if p.is_zero():
        raise ValueError("denomination of the zero polynomial")
    if any(v.kind == PARAM for v in p.variables()):
        raise ValueError("denomination requires a parameter-free polynomial")
    if len(idents) != 1:
        raise ValueError("denomination requires exactly one main variable")
    (ident,) = idents
    _, _, index = ident
    t = p.order_in(ident)
    pairs = []
    for i in range(t + 1):
        d = p.degree_in(main_var(index, i))
        if d:
            pairs.append((main_var(index, i), d))
    return Monomial.make(pairs)
