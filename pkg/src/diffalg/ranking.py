"""Rankings on the shifted-variable universe, leaders and reducedness.

A ranking is a total order on all shifts of a declared set of variable
identities such that sigma(a) > a and a > b implies sigma(a) > sigma(b).
It is built from ordered groups, each internally *orderly* (shift
decides first) or *elimination* (identity position decides first);
variables of a later group dominate all shifts of earlier groups.

Parameter identities that are not ranked are treated as coefficient
constants: they compare below every ranked variable and never become
leaders.  Main variables must always be ranked; meeting an undeclared
one raises :class:`RankingError`.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import RankingError
from .poly import MAIN, PARAM, DiffPoly, DiffVar, VarIdentity

ORDERLY = "orderly"
ELIMINATION = "elimination"

LT, EQ, GT = -1, 0, 1


class Ranking:
    """Total order on shifted variables, in layered groups."""

    __slots__ = ("groups", "_pos")

    def __init__(self, groups: Sequence[tuple[Sequence[VarIdentity], str]]):
        norm: list[tuple[tuple[VarIdentity, ...], str]] = []
        pos: dict[VarIdentity, tuple[int, int]] = {}
        for gi, (idents, kind) in enumerate(groups):
            if kind not in (ORDERLY, ELIMINATION):
                raise RankingError(f"unknown ranking kind {kind!r}")
            idents = tuple(idents)
            for pi, ident in enumerate(idents):
                if ident in pos:
                    raise RankingError(f"duplicate identity {ident} in ranking")
                pos[ident] = (gi, pi)
            norm.append((idents, kind))
        object.__setattr__(self, "groups", tuple(norm))
        object.__setattr__(self, "_pos", pos)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Ranking is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def orderly(idents: Iterable[VarIdentity]) -> "Ranking":
        return Ranking([(tuple(idents), ORDERLY)])

    @staticmethod
    def elimination(idents: Iterable[VarIdentity]) -> "Ranking":
        """Elimination ranking; identities listed from lowest to highest."""
        return Ranking([(tuple(idents), ELIMINATION)])

    @staticmethod
    def blocks(groups: Sequence[tuple[Iterable[VarIdentity], str]]) -> "Ranking":
        return Ranking([(tuple(ids), kind) for ids, kind in groups])

    # -- structure -----------------------------------------------------

    @property
    def kind(self) -> str:
        if len(self.groups) == 1:
            return self.groups[0][1]
        return "block-elimination"

    @property
    def universe(self) -> tuple[VarIdentity, ...]:
        return tuple(ident for idents, _ in self.groups for ident in idents)

    def main_identities(self) -> tuple[VarIdentity, ...]:
        return tuple(i for i in self.universe if i[0] == MAIN)

    def is_ranked(self, ident: VarIdentity) -> bool:
        return ident in self._pos

    def _slot(self, v: DiffVar) -> Optional[tuple[int, int]]:
        slot = self._pos.get(v.identity())
        if slot is None:
            if v.kind == MAIN:
                raise RankingError(f"variable {v} is not in the ranking universe")
            return None  # coefficient parameter
        return slot

    def compare(self, a: DiffVar, b: DiffVar) -> int:
        """-1, 0 or +1 for a < b, a = b, a > b."""
        if a == b:
            return EQ
        sa, sb = self._slot(a), self._slot(b)
        if sa is None or sb is None:
            if sa is None and sb is None:
                ka, kb = a.sort_key(), b.sort_key()
                return LT if ka < kb else GT
            return LT if sa is None else GT
        (ga, pa), (gb, pb) = sa, sb
        if ga != gb:
            return LT if ga < gb else GT
        if self.groups[ga][1] == ORDERLY:
            key_a = (a.shift, pa)
            key_b = (b.shift, pb)
        else:
            key_a = (pa, a.shift)
            key_b = (pb, b.shift)
        return LT if key_a < key_b else GT

    def strictly_below(self, low: VarIdentity, high: VarIdentity) -> bool:
        """True when every shift of ``low`` ranks below every shift of
        ``high`` (elimination-style dominance)."""
        if low not in self._pos:
            return high in self._pos or low != high
        if high not in self._pos:
            return False
        (gl, pl), (gh, ph) = self._pos[low], self._pos[high]
        if gl != gh:
            return gl < gh
        return self.groups[gl][1] == ELIMINATION and pl < ph

    # -- leaders ---------------------------------------------------------

    def leader(self, p: DiffPoly) -> Optional[DiffVar]:
        best: Optional[DiffVar] = None
        for v in p.variables():
            if self._slot(v) is None:
                continue
            if best is None or self.compare(v, best) == GT:
                best = v
        return best

    def is_constant(self, p: DiffPoly) -> bool:
        """No ranked variable occurs: p lies in the coefficient field
        (possibly extended by unranked parameters)."""
        return self.leader(p) is None


class LeaderParts(NamedTuple):
    leader: DiffVar
    initial: DiffPoly
    lvar: VarIdentity
    degree: int


def leader_parts(p: DiffPoly, ranking: Ranking) -> LeaderParts:
    lead = ranking.leader(p)
    if lead is None:
        raise ValueError("constant polynomial has no leader")
    deg = p.degree_in(lead)
    init = p.coeffs_in(lead)[deg]
    return LeaderParts(lead, init, lead.identity(), deg)


def rank_compare(f: DiffPoly, g: DiffPoly, ranking: Ranking) -> int:
    """Compare two polynomials by (leader, degree in leader); constants
    rank below everything."""
    cf, cg = ranking.is_constant(f), ranking.is_constant(g)
    if cf or cg:
        return EQ if cf and cg else (LT if cf else GT)
    lf = leader_parts(f, ranking)
    lg = leader_parts(g, ranking)
    c = ranking.compare(lf.leader, lg.leader)
    if c != EQ:
        return c
    if lf.degree != lg.degree:
        return LT if lf.degree < lg.degree else GT
    return EQ


def is_reduced(g: DiffPoly, f: DiffPoly, ranking: Ranking) -> bool:
    """True when deg(g, sigma^l(lead_f)) < deg(f, lead_f) for all l >= 0."""
    lf = leader_parts(f, ranking)
    bound = lf.degree
    ident = lf.lvar
    base_shift = lf.leader.shift
    for v in g.variables():
        if v.identity() == ident and v.shift >= base_shift:
            if g.degree_in(v) >= bound:
                return False
    return True
