"""Truncated algebraic elimination.

The Chow pipeline works in a finite shift window: prolong a chain up to
a bound B, adjoin the transforms of the hyperplanes up to B, and then
remove the main-variable block from the resulting algebraic system by a
pivot/resultant sweep.  Every output vanishes on every common zero of
the system with nonvanishing initials; the initials met along the way
are recorded so that spurious factors can be stripped from eliminants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import EliminationError, UnitIdealError
from .poly import MAIN, DiffPoly, DiffVar
from .polyops import (
    canonical_form,
    content_in,
    exact_div,
    leading_coeff,
    remove_known_factors,
    resultant,
    squarefree_part,
)
from .ranking import Ranking
from .reduction import Chain, prolong


@dataclass(frozen=True)
class TruncatedSystem:
    polynomials: tuple[DiffPoly, ...]
    bound: int
    eliminate_block: frozenset[DiffVar]
    keep_block: frozenset[DiffVar]

    def __post_init__(self):
        seen = set()
        for p in self.polynomials:
            seen |= p.variables()
        overlap = self.eliminate_block & self.keep_block
        if overlap:
            raise EliminationError(f"blocks overlap on {overlap}")
        missing = seen - self.eliminate_block - self.keep_block
        if missing:
            raise EliminationError(f"variables {missing} belong to no block")


def truncate(chain: Chain, hyperplanes: Sequence[DiffPoly], bound: int) -> TruncatedSystem:
    """Prolong the chain to the bound and adjoin all hyperplane transforms
    up to the bound; main variables form the eliminate block."""
    top = 0
    for p in list(chain) + list(hyperplanes):
        top = max(top, p.order())
    if bound < top:
        raise EliminationError(f"truncation bound {bound} below system order {top}")
    polys: list[DiffPoly] = []
    if len(chain):
        orders = {ident: bound for ident in chain.leading_identities()}
        polys.extend(m.poly for m in prolong(chain, orders))
    for h in hyperplanes:
        for k in range(bound + 1):
            polys.append(h.transform(k))
    elim: set[DiffVar] = set()
    keep: set[DiffVar] = set()
    for p in polys:
        for v in p.variables():
            (elim if v.kind == MAIN else keep).add(v)
    return TruncatedSystem(tuple(polys), bound, frozenset(elim), frozenset(keep))


def _elim_order(variables: Iterable[DiffVar]) -> list[DiffVar]:
    # Highest shift first, then canonical order descending.
    return sorted(variables, key=lambda v: (v.shift,) + v.sort_key(), reverse=True)


def _cleanup(p: DiffPoly, multipliers: Sequence[DiffPoly]) -> DiffPoly:
    if p.is_zero():
        return p
    p = remove_known_factors(p, multipliers)
    p = squarefree_part(p)
    return canonical_form(p)


def _sweep(sys: TruncatedSystem) -> tuple[list[DiffPoly], list[DiffPoly]]:
    pool: dict[DiffPoly, None] = {}
    for p in sys.polynomials:
        if not p.is_zero():
            pool.setdefault(canonical_form(p), None)
    multipliers: dict[DiffPoly, None] = {}
    for v in _elim_order(sys.eliminate_block):
        involved = [p for p in pool if p.degree_in(v) > 0]
        if not involved:
            continue
        for p in involved:
            del pool[p]
        if len(involved) == 1:
            continue  # nothing to pair it with; projection loses it
        pivot = min(
            involved,
            key=lambda p: (p.degree_in(v), len(p.terms), p.sort_token()),
        )
        init = canonical_form(leading_coeff(pivot, v))
        if not init.is_constant():
            multipliers.setdefault(init, None)
        for p in involved:
            if p is pivot:
                continue
            r = resultant(p, pivot, v)
            if r.is_zero():
                continue
            r = _cleanup(r, list(multipliers))
            if r.is_zero():
                continue
            if r.is_constant():
                raise UnitIdealError(
                    "elimination produced a nonzero constant: unit ideal"
                )
            pool.setdefault(r, None)
    return list(pool), list(multipliers)


def eliminate(sys: TruncatedSystem) -> list[DiffPoly]:
    """Generators of the eliminated ideal inside the keep-block ring."""
    gens, _ = _sweep(sys)
    return sorted(gens, key=lambda p: p.sort_token())


MemberTest = Callable[[DiffPoly], bool]


def refine_eliminant(
    f: DiffPoly,
    multipliers: Sequence[DiffPoly] = (),
    member: Optional[MemberTest] = None,
    ranking: Optional[Ranking] = None,
) -> DiffPoly:
    """Primitive squarefree representative of f with known initial
    factors stripped; a membership oracle, when available, licenses
    splitting off the content in the leader."""
    out = remove_known_factors(f, multipliers, keep_if=member)
    out = squarefree_part(out)
    if member is not None and ranking is not None and not ranking.is_constant(out):
        lead = ranking.leader(out)
        cont = content_in(out, lead)
        if not cont.is_constant():
            q = exact_div(out, cont)
            if q is not None and member(q):
                out = squarefree_part(q)
    return canonical_form(out)


def minimal_eliminant(
    gens: Iterable[DiffPoly],
    ranking: Ranking,
    *,
    multipliers: Sequence[DiffPoly] = (),
    member: Optional[MemberTest] = None,
) -> DiffPoly:
    """The lowest-ranked member of a characteristic set of the generators,
    normalized to a primitive squarefree representative."""
    from .charset import char_set  # local import to avoid a cycle

    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise EliminationError("zero ideal has no eliminant")
    result = char_set(gens, ranking)
    f = result.chain.elements[0]
    f = refine_eliminant(f, multipliers, member, ranking)
    if f.is_zero() or f.is_constant():
        raise EliminationError("eliminant degenerated to a constant")
    if member is not None and not member(f):
        raise EliminationError("eliminant failed the membership validation")
    return f
