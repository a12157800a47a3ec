"""Characteristic sets of finite difference polynomial systems."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Optional

from .errors import RankingError, UnitIdealError
from .poly import DiffPoly, VarIdentity
from .ranking import Ranking, is_reduced, rank_compare
from .reduction import Chain, chain_stats, diff_prem, diff_prem_witness

Combo = dict  # (source_index, shift) -> DiffPoly coefficient


def _shift_combo(combo: Combo, k: int) -> Combo:
    if k == 0:
        return combo
    return {(i, s + k): c.transform(k) for (i, s), c in combo.items()}


def _combo_axpy(target: Combo, coeff: DiffPoly, combo: Combo) -> None:
    for key, c in combo.items():
        cur = target.get(key)
        val = coeff * c if cur is None else cur + coeff * c
        if val.is_zero():
            target.pop(key, None)
        else:
            target[key] = val


def check_combo(poly: DiffPoly, combo: Combo, sources: list[DiffPoly]) -> bool:
    """Exact check that poly = sum c_{i,k} * sigma^k(sources[i])."""
    total = DiffPoly.zero()
    for (i, k), c in combo.items():
        total = total + c * sources[i].transform(k)
    return total == poly


@dataclass(frozen=True)
class CharSetResult:
    chain: Chain
    dim: int
    order: int
    parametric_set: frozenset
    ranking: Ranking
    dimension_polynomial: tuple[int, int]  # phi(t) = d*(t+1) + h
    witnesses: Optional[dict] = None  # chain position -> Combo over the input

    def phi(self, t: int) -> int:
        d, h = self.dimension_polynomial
        return dimension_polynomial(d, h, t)


def dimension_polynomial(d: int, h: int, t: int) -> int:
    """Evaluate the difference dimension polynomial d*(t+1) + h."""
    return d * (t + 1) + h


def _sorted_working(polys: Iterable[DiffPoly], ranking: Ranking) -> list[DiffPoly]:
    return sorted(
        polys,
        key=cmp_to_key(
            lambda a, b: rank_compare(a, b, ranking)
            or (-1 if a.sort_token() < b.sort_token() else (0 if a == b else 1))
        ),
    )


def _minimal_chain(polys: list[DiffPoly], ranking: Ranking) -> list[DiffPoly]:
    chosen: list[DiffPoly] = []
    for p in polys:
        if all(is_reduced(p, q, ranking) for q in chosen):
            chosen.append(p)
    return chosen


def char_set(
    system: Iterable[DiffPoly],
    ranking: Ranking,
    *,
    witnesses: bool = False,
) -> CharSetResult:
    """Ritt-Wu characteristic set of a finite difference system.

    Repeatedly selects the minimal ascending chain of the working set,
    reduces every other member by the difference pseudo-remainder, and
    adjoins the nonzero remainders, until all remainders vanish.  A
    nonzero base-field remainder raises :class:`UnitIdealError`.

    With ``witnesses=True`` every chain member carries an exact
    representation as a combination of transforms of the input system.
    """
    sources = [p for p in system]
    combos: dict[DiffPoly, Combo] = {}
    working: dict[DiffPoly, None] = {}
    for i, p in enumerate(sources):
        if p.is_zero():
            continue
        if ranking.is_constant(p):
            raise UnitIdealError(f"input contains the nonzero constant {p}")
        working.setdefault(p, None)
        if witnesses and p not in combos:
            combos[p] = {(i, 0): DiffPoly.one()}
    if not working:
        raise ValueError("characteristic set of an empty system")

    while True:
        ordered = _sorted_working(working, ranking)
        chain_polys = _minimal_chain(ordered, ranking)
        chain = Chain(chain_polys, ranking, validate=False)
        fresh: list[DiffPoly] = []
        for f in ordered:
            if f in chain_polys:
                continue
            wit = diff_prem_witness(f, chain)
            r = wit.remainder
            if r.is_zero():
                continue
            if ranking.is_constant(r):
                raise UnitIdealError(
                    f"inconsistent system: derived the nonzero constant {r}"
                )
            if r in working:
                continue
            if witnesses:
                combo: Combo = {}
                _combo_axpy(combo, wit.multiplier, combos[f])
                for i, k, q in wit.terms:
                    member_combo = _shift_combo(combos[chain.elements[i]], k)
                    _combo_axpy(combo, -q, member_combo)
                combos[r] = combo
            fresh.append(r)
        if not fresh:
            stats = chain_stats(chain)
            wit_map = None
            if witnesses:
                wit_map = {i: combos[p] for i, p in enumerate(chain.elements)}
            return CharSetResult(
                chain=chain,
                dim=len(stats.parametric_set),
                order=stats.order,
                parametric_set=stats.parametric_set,
                ranking=ranking,
                dimension_polynomial=(len(stats.parametric_set), stats.order),
                witnesses=wit_map,
            )
        for r in fresh:
            working.setdefault(r, None)


def sat_member(f: DiffPoly, chain: Chain) -> bool:
    """Membership in sat(chain), valid when the chain is a characteristic
    set of a reflexive prime difference ideal (caller-asserted)."""
    return diff_prem(f, chain).is_zero()


def relative_order(chain: Chain) -> int:
    """The chain order read as the relative order over its parametric
    set; requires an elimination-type ranking placing that set lowest."""
    stats = chain_stats(chain)
    leads = chain.leading_identities()
    for u in stats.parametric_set:
        for w in leads:
            if not chain.ranking.strictly_below(u, w):
                raise RankingError(
                    f"ranking does not eliminate {w} over the parametric set"
                )
    return stats.order
