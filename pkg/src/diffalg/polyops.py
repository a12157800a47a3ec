"""Polynomial-ring machinery on difference polynomials viewed algebraically:
pseudo-division, exact division, resultants, gcds, and normal forms.

Everything here treats each shifted variable as an independent
indeterminate over the coefficient field; no shifts are applied.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .coeffs import RatFunc, X_ONE, coeff_is_negative, rational_content, xp_divmod, xp_gcd, xp_mul
from .poly import ONE, ZERO, DiffPoly, DiffVar, Monomial


def degree_in(p: DiffPoly, v: DiffVar) -> int:
    return p.degree_in(v)


def leading_coeff(p: DiffPoly, v: DiffVar) -> DiffPoly:
    """Coefficient of the highest power of v in p (p itself if v absent)."""
    d = p.degree_in(v)
    return p.coeffs_in(v).get(d, ZERO)


def pseudo_divmod(
    f: DiffPoly, g: DiffPoly, v: DiffVar
) -> tuple[DiffPoly, DiffPoly, int]:
    """Pseudo-division of f by g in the variable v.

    Returns (q, r, e) with lc_v(g)^e * f = q*g + r and deg_v(r) < deg_v(g),
    using the minimal multiplier power e (one per reduction step).
    """
    n = g.degree_in(v)
    if g.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    if n == 0:
        raise ValueError("divisor must involve the division variable")
    lead = leading_coeff(g, v)
    q = ZERO
    r = f
    e = 0
    while not r.is_zero():
        dr = r.degree_in(v)
        if dr < n:
            break
        c = leading_coeff(r, v)
        shift_mon = DiffPoly.var(v, dr - n) if dr > n else ONE
        q = lead * q + c * shift_mon
        r = lead * r - c * shift_mon * g
        e += 1
    return q, r, e


def prem(f: DiffPoly, g: DiffPoly, v: DiffVar) -> DiffPoly:
    return pseudo_divmod(f, g, v)[1]


def exact_div(f: DiffPoly, g: DiffPoly) -> Optional[DiffPoly]:
    """Exact quotient f/g in the full polynomial ring, or None."""
    if g.is_zero():
        raise ZeroDivisionError("exact division by zero")
    if f.is_zero():
        return ZERO
    if g.is_constant():
        return f / g.constant_value()
    gm, gc = g.leading_term()
    qterms: dict[Monomial, object] = {}
    r = f
    while not r.is_zero():
        rm, rc = r.leading_term()
        if not gm.divides(rm):
            return None
        m = rm.div(gm)
        c = rc / gc
        qterms[m] = c
        r = r - DiffPoly({m: c}) * g
    return DiffPoly(qterms)


def divides(g: DiffPoly, f: DiffPoly) -> bool:
    return exact_div(f, g) is not None


def _sylvester_resultant(f: DiffPoly, g: DiffPoly, v: DiffVar) -> DiffPoly:
    """Resultant via cofactor expansion of the Sylvester matrix.  Only
    used as a cross-check oracle for small degrees."""
    m, n = f.degree_in(v), g.degree_in(v)
    if m == 0 and n == 0:
        return ONE
    if m == 0:
        return f**n
    if n == 0:
        return g**m
    fc = f.coeffs_in(v)
    gc = g.coeffs_in(v)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([fc.get(m - (j - i), ZERO) if 0 <= j - i <= m else ZERO for j in range(size)])
    for i in range(m):
        rows.append([gc.get(n - (j - i), ZERO) if 0 <= j - i <= n else ZERO for j in range(size)])

    def det(mat: list[list[DiffPoly]]) -> DiffPoly:
        k = len(mat)
        if k == 1:
            return mat[0][0]
        total = ZERO
        for j, entry in enumerate(mat[0]):
            if entry.is_zero():
                continue
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            term = entry * det(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    return det(rows)


def resultant(f: DiffPoly, g: DiffPoly, v: DiffVar) -> DiffPoly:
    """Resultant of f and g with respect to v, by the subresultant PRS."""
    m, n = f.degree_in(v), g.degree_in(v)
    if f.is_zero() or g.is_zero():
        return ZERO
    if m == 0 and n == 0:
        return ONE
    sign = 1
    if m < n:
        f, g, m, n = g, f, n, m
        if (m % 2) and (n % 2):
            sign = -sign
    if n == 0:
        res = g**m
        return -res if sign < 0 else res
    if n == 1:
        # res(f, a*v + b) = (-1)^m * sum_i f_i (-b)^i a^(m-i)
        a = leading_coeff(g, v)
        b = g - a * DiffPoly.var(v)
        fc = f.coeffs_in(v)
        total = ZERO
        for i, ci in fc.items():
            total = total + ci * (-b) ** i * a ** (m - i)
        if m % 2:
            total = -total
        return -total if sign < 0 else total
    gg = ONE
    hh = ONE
    A, B = f, g
    while True:
        da, db = A.degree_in(v), B.degree_in(v)
        delta = da - db
        if (da % 2) and (db % 2):
            sign = -sign
        _, R, e = pseudo_divmod(A, B, v)
        lb = leading_coeff(B, v)
        if e < delta + 1:
            R = lb ** (delta + 1 - e) * R
        A = B
        if R.is_zero():
            return ZERO
        num = exact_div(R, gg * hh**delta)
        assert num is not None, "subresultant division must be exact"
        B = num
        gg = leading_coeff(A, v)
        if delta:
            hp = exact_div(gg**delta, hh ** (delta - 1))
            assert hp is not None
            hh = hp
        if B.degree_in(v) == 0:
            da = A.degree_in(v)
            t = exact_div(B**da, hh ** (da - 1))
            assert t is not None
            return -t if sign < 0 else t


def content_in(p: DiffPoly, v: DiffVar) -> DiffPoly:
    """gcd of the coefficients of p as a polynomial in v."""
    cont = ZERO
    for c in p.coeffs_in(v).values():
        cont = poly_gcd(cont, c)
        if cont.is_constant() and not cont.is_zero():
            return ONE
    return cont


def primitive_in(p: DiffPoly, v: DiffVar) -> DiffPoly:
    cont = content_in(p, v)
    if cont.is_zero() or cont == ONE:
        return p
    q = exact_div(p, cont)
    assert q is not None
    return q


def poly_gcd(f: DiffPoly, g: DiffPoly) -> DiffPoly:
    """gcd in the multivariate polynomial ring over the coefficient field,
    normalized only up to a field unit.  Primitive-PRS based."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    if f.is_constant() or g.is_constant():
        return ONE
    common = f.variables() & g.variables()
    if not common:
        return ONE
    v = max(common, key=lambda w: w.sort_key())
    df, dg = f.degree_in(v), g.degree_in(v)
    if df == 0 or dg == 0:
        # v was chosen from the shared variables, so both degrees are >= 1
        raise AssertionError("shared variable with zero degree")
    cf, cg = content_in(f, v), content_in(g, v)
    c = poly_gcd(cf, cg)
    A = primitive_in(f, v)
    B = primitive_in(g, v)
    if A.degree_in(v) < B.degree_in(v):
        A, B = B, A
    while not B.is_zero() and B.degree_in(v) > 0:
        r = prem(A, B, v)
        A, B = B, r if r.is_zero() else primitive_in(r, v)
    if not B.is_zero():
        return c
    return c * primitive_in(A, v)


def squarefree_part(p: DiffPoly) -> DiffPoly:
    """Divide out repeated factors; the zero set is unchanged."""
    if p.is_zero() or p.is_constant():
        return p
    out = p
    for v in sorted(p.variables(), key=lambda w: w.sort_key(), reverse=True):
        if out.degree_in(v) < 2:
            continue
        g = poly_gcd(out, out.partial(v))
        if g.is_constant():
            continue
        q = exact_div(out, g)
        assert q is not None
        out = q
    return out


def _xpoly_lcm(a, b):
    g = xp_gcd(a, b)
    return xp_divmod(xp_mul(a, b), g)[0]


def make_primitive(p: DiffPoly) -> DiffPoly:
    """Scale by a base-field unit so that coefficients are integral and
    coprime: over Q, integer coefficients with gcd 1; over Q(x),
    additionally a common x-polynomial factor is removed."""
    if p.is_zero():
        return p
    coeffs = list(p.terms.values())
    if any(isinstance(c, RatFunc) for c in coeffs):
        den_lcm = X_ONE
        for c in coeffs:
            if isinstance(c, RatFunc):
                den_lcm = _xpoly_lcm(den_lcm, c.den)
        scaled = p.scale(RatFunc(den_lcm))
        nums = [
            c.num if isinstance(c, RatFunc) else (Fraction(c),)
            for c in scaled.terms.values()
        ]
        g = nums[0]
        for npoly in nums[1:]:
            g = xp_gcd(g, npoly)
            if g == X_ONE:
                break
        if g != X_ONE:
            scaled = scaled.scale(RatFunc(X_ONE, g))
        rat = rational_content(
            [
                fr
                for c in scaled.terms.values()
                for fr in (c.num if isinstance(c, RatFunc) else (c,))
                if fr
            ]
        )
        if rat not in (0, 1):
            scaled = scaled.scale(Fraction(1) / rat)
        return scaled
    rat = rational_content(coeffs)
    if rat not in (0, 1):
        return p.scale(Fraction(1) / rat)
    return p


def normalize_sign(p: DiffPoly) -> DiffPoly:
    """Fix the representative sign: the canonical leading coefficient is
    positive (for Q(x): its leading numerator coefficient)."""
    if p.is_zero():
        return p
    _, c = p.leading_term()
    return -p if coeff_is_negative(c) else p


def canonical_form(p: DiffPoly) -> DiffPoly:
    """Primitive, sign-normalized representative of p up to field units."""
    return normalize_sign(make_primitive(p))


def remove_known_factors(
    p: DiffPoly,
    factors: Iterable[DiffPoly],
    keep_if=None,
) -> DiffPoly:
    """Strip factors from a known multiplier set (initials met during
    elimination), which are nonzero on the zero set under the
    nonvanishing-initials proviso.  When ``keep_if`` is given, a division
    is only accepted if the quotient still satisfies it."""
    out = p
    for fct in factors:
        if fct.is_constant():
            continue
        while True:
            q = exact_div(out, fct)
            if q is None or q.is_zero():
                break
            if keep_if is not None and not keep_if(q):
                break
            out = q
    return out
