"""The difference Chow form of an irreducible difference variety, and the
verification predicates for its structural properties.

Given a characteristic set of a reflexive prime ideal of dimension d in
F{y_1..y_n}, adjoin d+1 generic hyperplanes, eliminate the main
variables in a truncated shift window, and keep the lowest member of a
characteristic set of the eliminated ideal.  Membership in the Chow
ideal is decidable exactly: substitute u_{i0} -> -(u_{i1} y_1 + ... +
u_{in} y_n) and reduce against the source chain.  That oracle validates
every eliminant and licenses dropping spurious initial factors.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .charset import char_set
from .elimination import (
    EliminationError,
    _sweep,
    refine_eliminant,
    truncate,
)
from .errors import ChainError, VerificationError
from .generic import make_hyperplanes
from .poly import (
    DiffPoly,
    DiffVar,
    MAIN,
    PARAM,
    Monomial,
    lambda_var,
    main_var,
    param_var,
    substitute_identities,
    substitute_ratio,
    is_transformally_homogeneous,
)
from .polyops import canonical_form
from .ranking import ELIMINATION, ORDERLY, Ranking
from .reduction import Chain, chain_stats, diff_prem


def hyperplane_identities(d: int, n: int) -> list:
    return [(PARAM, i, j) for i in range(d + 1) for j in range(n + 1)]


def chow_ranking(d: int, n: int) -> Ranking:
    """Default orderly ranking on the hyperplane coefficient blocks."""
    return Ranking.orderly(hyperplane_identities(d, n))


@dataclass(frozen=True)
class ChowData:
    form: DiffPoly
    companions: tuple[DiffPoly, ...]
    d: int
    n: int
    order: int
    euler_degrees: tuple[int, ...]
    degree: int
    ranking: Ranking
    source_chain: Optional[Chain]
    bound: Optional[int] = None
    certification: str = "primitive-squarefree, irreducibility unverified"

    def chow_chain(self) -> Chain:
        members = (self.form,) + self.companions
        try:
            return Chain(members, self.ranking)
        except ChainError:
            return Chain(members, self.ranking, triangular=True, validate=False)

    def blocks(self) -> range:
        return range(self.d + 1)


@dataclass(frozen=True)
class RecoveredPoint:
    """Coordinates eta_rho = (dF/du_{0rho}) / (dF/du_{00}) as formal
    ratios over the coefficient blocks."""

    numerators: tuple[DiffPoly, ...]
    denominator: DiffPoly


# ---------------------------------------------------------------------
# Membership oracle and the elimination pipeline
# ---------------------------------------------------------------------


def chow_ideal_member(p: DiffPoly, source_chain: Chain, d: int, n: int) -> bool:
    """Exact membership test for the Chow ideal: evaluate at the generic
    point of the adjoined hyperplane system and reduce."""
    bindings = {}
    for i in range(d + 1):
        rhs = DiffPoly.zero()
        for j in range(1, n + 1):
            rhs = rhs - DiffPoly.var(param_var(i, j)) * DiffPoly.var(main_var(j))
        bindings[(PARAM, i, 0)] = rhs
    q = substitute_identities(p, bindings)
    if not len(source_chain):
        return q.is_zero()
    return diff_prem(q, source_chain).is_zero()


def _main_count(chain: Chain) -> int:
    return len(chain.ranking.main_identities())


def _chow_at_bound(
    chain: Chain,
    hyperplanes: Sequence[DiffPoly],
    bound: int,
    ranking: Ranking,
    member,
) -> Optional[tuple[DiffPoly, tuple[DiffPoly, ...]]]:
    gens, multipliers = _sweep(truncate(chain, hyperplanes, bound))
    cleaned: dict[DiffPoly, None] = {}
    for g in gens:
        r = refine_eliminant(g, multipliers, member, ranking)
        if r.is_zero():
            continue
        if r.is_constant():
            raise VerificationError("Chow elimination produced a constant")
        if not member(r):
            raise VerificationError(
                f"eliminant {r} is outside the Chow ideal: pipeline bug"
            )
        cleaned.setdefault(r, None)
    if not cleaned:
        return None
    work = list(cleaned)
    for _ in range(3):
        result = char_set(work, ranking)
        first = result.chain.elements[0]
        refined = refine_eliminant(first, multipliers, member, ranking)
        if refined == canonical_form(first):
            form = refined
            companions = tuple(
                canonical_form(p) for p in result.chain.elements[1:]
            )
            return form, companions
        work.append(refined)
    raise EliminationError("eliminant refinement did not stabilize")


def chow_form(
    chain: Chain,
    *,
    bound: Optional[int] = None,
    retries: int = 3,
    check_stability: bool = True,
) -> ChowData:
    """Compute the Chow form and its companion characteristic-set members
    for the reflexive prime ideal presented by the chain (caller-asserted
    prime).  The truncation bound is raised automatically until the
    eliminant is stable under a further increase."""
    for p in chain:
        if any(v.kind == PARAM for v in p.variables()):
            raise ValueError("source chain must involve main variables only")
    n = _main_count(chain)
    stats = chain_stats(chain)
    d = len(stats.parametric_set)
    ranking = chow_ranking(d, n)
    hyps = [h.poly for h in make_hyperplanes(n, d + 1)]

    def member(p: DiffPoly) -> bool:
        return chow_ideal_member(p, chain, d, n)

    b0 = bound if bound is not None else stats.order + 1
    b0 = max(b0, max((p.order() for p in chain), default=0))
    prev: Optional[tuple[DiffPoly, tuple[DiffPoly, ...]]] = None
    prev_bound = b0
    for step in range(retries + 1):
        b = b0 + step
        cur = _chow_at_bound(chain, hyps, b, ranking, member)
        if cur is None:
            prev = None
            continue
        if not check_stability:
            prev, prev_bound = cur, b
            break
        if prev is not None and prev[0] == cur[0]:
            break
        prev, prev_bound = cur, b
    else:
        if check_stability:
            raise EliminationError(
                f"Chow eliminant did not stabilize after {retries} retries"
            )
    if prev is None:
        raise EliminationError("elimination produced no Chow ideal generators")
    form, companions = prev
    h = form.order_in((PARAM, 0, 0))
    if h is None:
        raise VerificationError("u0_0 does not occur in the Chow form")
    rks = _euler_degrees(form, d, n, h)
    return ChowData(
        form=form,
        companions=companions,
        d=d,
        n=n,
        order=h,
        euler_degrees=tuple(rks),
        degree=sum(rks),
        ranking=ranking,
        source_chain=chain,
        bound=prev_bound,
    )


def chow_form_univariate(
    g: DiffPoly, companions: Sequence[DiffPoly] = ()
) -> ChowData:
    """Closed-form Chow data for sat(g, companions) in one main variable:
    substitute y -> -u0_0/u0_1 and clear denominators minimally.  Serves
    as the independent oracle for :func:`chow_form` at n = 1."""
    mains = {v.identity() for v in g.variables() if v.kind == MAIN}
    if len(mains) != 1:
        raise ValueError("the univariate construction needs one main variable")
    if g.is_constant():
        raise ValueError("cannot take the Chow form of a constant")
    (_, _, index) = next(iter(mains))
    ratio = {index: (-DiffPoly.var(param_var(0, 0)), DiffPoly.var(param_var(0, 1)))}
    form = canonical_form(substitute_ratio(g, ratio))
    comps = tuple(canonical_form(substitute_ratio(c, ratio)) for c in companions)
    ranking = chow_ranking(0, 1)
    h = form.order_in((PARAM, 0, 0))
    if h is None:
        raise VerificationError("u0_0 does not occur in the Chow form")
    rks = _euler_degrees(form, 0, 1, h)
    source = None
    try:
        source = Chain([g] + list(companions), Ranking.orderly([(MAIN, None, index)]))
    except ChainError:
        pass
    return ChowData(
        form=form,
        companions=comps,
        d=0,
        n=1,
        order=h,
        euler_degrees=tuple(rks),
        degree=sum(rks),
        ranking=ranking,
        source_chain=source,
        bound=None,
        certification="closed-form",
    )


# ---------------------------------------------------------------------
# Structural verification predicates
# ---------------------------------------------------------------------


def verify_block_symmetry(cd: ChowData, rho: int, tau: int) -> int:
    """Interchanging two coefficient blocks changes the Chow form by at
    most a sign; returns that sign."""
    if rho == tau:
        return 1
    if not (0 <= rho <= cd.d and 0 <= tau <= cd.d):
        raise ValueError("block indices out of range")
    bindings = {}
    for j in range(cd.n + 1):
        bindings[(PARAM, rho, j)] = DiffPoly.var(param_var(tau, j))
        bindings[(PARAM, tau, j)] = DiffPoly.var(param_var(rho, j))
    swapped = substitute_identities(cd.form, bindings)
    if swapped == cd.form:
        return 1
    if swapped == -cd.form:
        return -1
    raise VerificationError(
        f"block swap {rho}<->{tau} is not a sign change: pipeline bug"
    )


@dataclass(frozen=True)
class OrderProfileRow:
    variable: DiffVar
    present: bool
    order: Optional[int]
    lord: Optional[int]
    note: str = ""


def verify_order_profile(cd: ChowData) -> list[OrderProfileRow]:
    """Check that every occurring u_{ij} has order h and least order 0,
    and that every u_{i0} occurs; absent u_{ij} are flagged as the
    y_j-in-the-ideal case."""
    rows = []
    h = cd.order
    for i in cd.blocks():
        for j in range(cd.n + 1):
            ident = (PARAM, i, j)
            o = cd.form.order_in(ident)
            if o is None:
                if j == 0:
                    raise VerificationError(f"u{i}_0 missing from the Chow form")
                rows.append(
                    OrderProfileRow(param_var(i, j), False, None, None,
                                    f"y{j} lies in the ideal of the variety")
                )
                continue
            l = cd.form.lord_in(ident)
            if o != h:
                raise VerificationError(
                    f"ord(F, u{i}_{j}) = {o} differs from ord(F) = {h}"
                )
            if l != 0:
                raise VerificationError(f"lord(F, u{i}_{j}) = {l} is not zero")
            rows.append(OrderProfileRow(param_var(i, j), True, o, l))
    return rows


def _euler_degrees(form: DiffPoly, d: int, n: int, h: int) -> list[int]:
    """Euler weights r_k: same-block weighted derivative sums give r_k*F,
    cross-block sums vanish.  (The weights come from the proof of the
    homogeneity theorem; its printed statement swaps the two cases.)"""
    rks: Optional[list[int]] = None
    for sigma in range(d + 1):
        mine = []
        for k in range(h + 1):
            for tau in range(d + 1):
                s = DiffPoly.zero()
                for j in range(n + 1):
                    s = s + DiffPoly.var(param_var(tau, j, k)) * form.partial(
                        param_var(sigma, j, k)
                    )
                if tau != sigma:
                    if not s.is_zero():
                        raise VerificationError(
                            f"cross-block Euler sum (sigma={sigma}, tau={tau}, "
                            f"k={k}) is nonzero"
                        )
                    continue
                r = _ratio_to_int(s, form)
                if r is None or r < 0:
                    raise VerificationError(
                        f"Euler sum for block {sigma}, shift {k} is not a "
                        "non-negative integer multiple of F"
                    )
                mine.append(r)
        if rks is None:
            rks = mine
        elif rks != mine:
            raise VerificationError("Euler weights differ between blocks")
    assert rks is not None
    # Cross-check against the direct homogeneity test, block by block.
    for sigma in range(d + 1):
        ok, mono = is_transformally_homogeneous(
            form, [(PARAM, sigma, j) for j in range(n + 1)]
        )
        expected = Monomial.make(
            (lambda_var(k), r) for k, r in enumerate(rks) if r
        )
        if not ok or mono != expected:
            raise VerificationError(
                f"homogeneity test disagrees with Euler weights on block {sigma}"
            )
    return rks


def _ratio_to_int(s: DiffPoly, form: DiffPoly) -> Optional[int]:
    if s.is_zero():
        return 0
    m = next(iter(form.terms))
    if m not in s.terms:
        return None
    ratio = s.terms[m] / form.terms[m]
    if hasattr(ratio, "is_rational"):
        if not ratio.is_rational():
            return None
        ratio = ratio.as_fraction()
    if ratio.denominator != 1:
        return None
    return int(ratio) if s == form.scale(ratio) else None


def euler_check(cd: ChowData) -> tuple[int, ...]:
    """Recompute and validate the Euler weights r_0..r_h."""
    rks = _euler_degrees(cd.form, cd.d, cd.n, cd.order)
    if tuple(rks) != cd.euler_degrees:
        raise VerificationError("stored Euler weights are stale")
    return tuple(rks)


def difference_degree(cd: ChowData) -> int:
    """The homogeneous degree sum(r_k), identical for every block."""
    return sum(euler_check(cd))


def recover_point(cd: ChowData) -> RecoveredPoint:
    """The generic point recovered from the Chow data; every source
    generator must vanish at it modulo the Chow chain."""
    den = cd.form.partial(param_var(0, 0))
    chow_chain = cd.chow_chain()
    if den.is_zero() or diff_prem(den, chow_chain).is_zero():
        raise VerificationError("dF/du0_0 vanishes modulo the Chow ideal")
    nums = tuple(cd.form.partial(param_var(0, j)) for j in range(1, cd.n + 1))
    if cd.source_chain is not None:
        ratios = {j + 1: (nums[j], den) for j in range(cd.n)}
        for p in cd.source_chain:
            numerator = substitute_ratio(p, ratios)
            if not diff_prem(numerator, chow_chain).is_zero():
                raise VerificationError(
                    f"recovered point does not satisfy {p}"
                )
    return RecoveredPoint(nums, den)


def extend_charset(cd: ChowData) -> Chain:
    """Characteristic set of the full hyperplane-section ideal in the
    mixed ring: the Chow chain plus the recovery members
    dF/du0_0 * y_rho - dF/du0_rho, under u < y_1 < ... < y_n."""
    den = cd.form.partial(param_var(0, 0))
    members = [cd.form, *cd.companions]
    for rho in range(1, cd.n + 1):
        members.append(
            den * DiffPoly.var(main_var(rho)) - cd.form.partial(param_var(0, rho))
        )
    groups = [(hyperplane_identities(cd.d, cd.n), ORDERLY)]
    groups.append(([(MAIN, None, j) for j in range(1, cd.n + 1)], ELIMINATION))
    ranking = Ranking.blocks(groups)
    try:
        ext = Chain(members, ranking)
    except ChainError:
        ext = Chain(members, ranking, triangular=True, validate=False)
    hyps = make_hyperplanes(cd.n, cd.d + 1)
    for h in hyps:
        if not diff_prem(h.poly, ext).is_zero():
            raise VerificationError(f"hyperplane {h.poly} does not reduce to zero")
    if cd.source_chain is not None:
        for p in cd.source_chain:
            if not diff_prem(p, ext).is_zero():
                raise VerificationError(f"source generator {p} does not reduce")
    return ext


def transform_chow(cd: ChowData, matrix: Sequence[Sequence]) -> ChowData:
    """Chow data of the image variety under the linear substitution
    Y = A X: replace each block row u_i by u_i * diag(1, A)."""
    n = cd.n
    A = [[_as_field(matrix[i][j]) for j in range(n)] for i in range(n)]
    if _field_det(A) == 0:
        raise ValueError("transformation matrix is singular")
    bindings = {}
    for i in cd.blocks():
        for j in range(1, n + 1):
            rhs = DiffPoly.zero()
            for l in range(1, n + 1):
                rhs = rhs + DiffPoly.const(A[l - 1][j - 1]) * DiffPoly.var(
                    param_var(i, l)
                )
            bindings[(PARAM, i, j)] = rhs
    form = canonical_form(substitute_identities(cd.form, bindings))
    comps = tuple(
        canonical_form(substitute_identities(c, bindings)) for c in cd.companions
    )
    h = form.order_in((PARAM, 0, 0))
    if h != cd.order:
        raise VerificationError("linear transformation changed the order")
    rks = _euler_degrees(form, cd.d, n, h)
    if sum(rks) != cd.degree:
        raise VerificationError("linear transformation changed the degree")
    return replace(
        cd,
        form=form,
        companions=comps,
        euler_degrees=tuple(rks),
        degree=sum(rks),
        source_chain=None,
    )


def _as_field(v):
    from .coeffs import RatFunc

    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, RatFunc):
        return v
    raise TypeError(f"matrix entries must be field elements, got {v!r}")


def _field_det(A):
    n = len(A)
    rows = [list(r) for r in A]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = 1 / rows[c][c] if not isinstance(rows[c][c], Fraction) else Fraction(1) / rows[c][c]
        for r in range(c + 1, n):
            factor = rows[r][c] * inv
            if factor == 0:
                continue
            for k in range(c, n):
                rows[r][k] = rows[r][k] - factor * rows[c][k]
    return det


def vanishing_test(cd: ChowData, assignment: Mapping[DiffVar, object]) -> bool:
    """True iff the Chow form and all companions vanish at the given
    coefficient assignment (a necessary condition for the hyperplanes to
    meet the variety).  Every occurring shifted variable needs a value."""
    for p in (cd.form, *cd.companions):
        for v in p.variables():
            if v not in assignment:
                raise ValueError(f"incomplete assignment: no value for {v}")
    for p in (cd.form, *cd.companions):
        value = p.eval_vars(assignment)
        if not _is_zero_value(value):
            return False
    return True


def _is_zero_value(value) -> bool:
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0
