"""Ascending chains, prolongation and difference pseudo-remainders."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Mapping, Optional, Sequence

from .errors import ChainError
from .poly import DiffPoly, DiffVar, ONE, VarIdentity, identity_key
from .polyops import leading_coeff, pseudo_divmod
from .ranking import GT, LeaderParts, Ranking, is_reduced, leader_parts, rank_compare

_MAX_REDUCTION_PASSES = 64


class Chain:
    """A finite ascending chain (or, when ``triangular`` is set, a
    difference triangular set) with cached leader data."""

    __slots__ = ("elements", "ranking", "triangular", "_parts")

    def __init__(
        self,
        elements: Sequence[DiffPoly],
        ranking: Ranking,
        *,
        triangular: bool = False,
        validate: bool = True,
    ):
        elems = [p for p in elements]
        for p in elems:
            if p.is_zero():
                raise ChainError("chains cannot contain zero")
            if ranking.is_constant(p):
                raise ChainError(f"chain member {p} is constant under the ranking")
        elems.sort(key=cmp_to_key(lambda a, b: rank_compare(a, b, ranking)))
        parts = tuple(leader_parts(p, ranking) for p in elems)
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "ranking", ranking)
        object.__setattr__(self, "triangular", triangular)
        object.__setattr__(self, "_parts", parts)
        if validate:
            self._validate()

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Chain is immutable")

    def _validate(self) -> None:
        n = len(self.elements)
        leaders = [p.leader for p in self._parts]
        if len(set(leaders)) != n:
            raise ChainError("chain members must have distinct leaders")
        for j in range(n):
            for i in range(j):
                if rank_compare(self.elements[j], self.elements[i], self.ranking) != GT:
                    raise ChainError("chain is not strictly increasing")
                if not is_reduced(self.elements[j], self.elements[i], self.ranking):
                    if not self.triangular:
                        raise ChainError(
                            f"{self.elements[j]} is not reduced w.r.t. "
                            f"{self.elements[i]}"
                        )
        if self.triangular:
            # Triangular sets additionally need initials that do not
            # reduce to zero against the set itself.
            for info in self._parts:
                if not self.ranking.is_constant(info.initial):
                    if diff_prem(info.initial, self).is_zero():
                        raise ChainError("initial reduces to zero: not a valid set")

    # -- access ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def parts(self, i: int) -> LeaderParts:
        return self._parts[i]

    def groups(self) -> dict[VarIdentity, list[int]]:
        """Member indices per leading variable, orders ascending, in
        canonical identity order."""
        out: dict[VarIdentity, list[int]] = {}
        for i, info in enumerate(self._parts):
            out.setdefault(info.lvar, []).append(i)
        return dict(sorted(out.items(), key=lambda kv: identity_key(kv[0])))

    def leading_identities(self) -> set[VarIdentity]:
        return {info.lvar for info in self._parts}

    def __repr__(self) -> str:
        inner = ", ".join(str(p) for p in self.elements)
        return f"Chain[{inner}]"


@dataclass(frozen=True)
class ChainStats:
    order: int
    parametric_set: frozenset


def chain_stats(chain: Chain) -> ChainStats:
    """Order (sum of first-member orders per leading variable) and the
    parametric set (ranked identities that lead no member)."""
    order = 0
    for ident, idxs in chain.groups().items():
        order += chain.parts(idxs[0]).leader.shift
    parametric = frozenset(chain.ranking.universe) - chain.leading_identities()
    return ChainStats(order, parametric)


@dataclass(frozen=True)
class ProlongedMember:
    poly: DiffPoly
    source: int  # index into the chain
    shift: int
    leader: DiffVar


def prolong(chain: Chain, orders: Mapping[VarIdentity, Optional[int]]) -> list[ProlongedMember]:
    """The algebraic triangular sequence obtained by adjoining transforms
    of every chain member.

    Within the group led by variable c with member orders o_1 < ... < o_l,
    member j is transformed up to o_{j+1} - o_j - 1, and the last member
    up to hbar - o_l where hbar = max(orders[c], o_l + 1).
    """
    out: list[ProlongedMember] = []
    for ident, idxs in chain.groups().items():
        os = [chain.parts(i).leader.shift for i in idxs]
        h = orders.get(ident)
        hbar = max(h if h is not None else os[-1] + 1, os[-1] + 1)
        for j, i in enumerate(idxs):
            top = (os[j + 1] - os[j] - 1) if j + 1 < len(idxs) else (hbar - os[-1])
            base = chain.elements[i]
            lead = chain.parts(i).leader
            for k in range(top + 1):
                out.append(
                    ProlongedMember(base.transform(k), i, k, lead.shifted(k))
                )
    out.sort(key=cmp_to_key(lambda a, b: chain.ranking.compare(a.leader, b.leader)))
    return out


@dataclass
class Witness:
    """Exact certificate H*f = sum_i q_i * T_i + remainder."""

    multiplier: DiffPoly
    quotients: list
    remainder: DiffPoly

    def check(self, f: DiffPoly, members: Sequence[DiffPoly]) -> bool:
        total = self.remainder
        for q, t in zip(self.quotients, members):
            total = total + q * t
        return total == self.multiplier * f


def algebraic_prem_witness(
    f: DiffPoly, members: Sequence[DiffPoly], leaders: Sequence[DiffVar]
) -> Witness:
    """Successive pseudo-division by a triangular sequence, highest
    leader first; ``members``/``leaders`` are aligned and assumed sorted
    with ascending leaders."""
    h = ONE
    quots: list[DiffPoly] = [DiffPoly.zero() for _ in members]
    r = f
    for _ in range(_MAX_REDUCTION_PASSES):
        changed = False
        for i in range(len(members) - 1, -1, -1):
            v = leaders[i]
            d = members[i].degree_in(v)
            if r.degree_in(v) < d:
                continue
            q, r, e = pseudo_divmod(r, members[i], v)
            if e:
                init = leading_coeff(members[i], v)
                mult = init**e
                h = h * mult
                quots = [qq * mult for qq in quots]
                quots[i] = quots[i] + q
                changed = True
        if not changed:
            return Witness(h, quots, r)
    raise ChainError("pseudo-reduction did not stabilize")


def algebraic_prem(f: DiffPoly, members: Sequence[DiffPoly], ranking: Ranking) -> DiffPoly:
    """Pseudo-remainder of f by an algebraic triangular sequence with
    distinct leaders."""
    infos = [leader_parts(m, ranking) for m in members]
    if len({i.leader for i in infos}) != len(members):
        raise ChainError("triangular sequence needs distinct leaders")
    idx = sorted(
        range(len(members)),
        key=cmp_to_key(lambda a, b: ranking.compare(infos[a].leader, infos[b].leader)),
    )
    ordered = [members[i] for i in idx]
    leaders = [infos[i].leader for i in idx]
    return algebraic_prem_witness(f, ordered, leaders).remainder


@dataclass
class DiffWitness:
    """Certificate H*f = sum q_j * sigma^{k_j}(A_{i_j}) + remainder."""

    multiplier: DiffPoly
    terms: list  # list[(source_index, shift, quotient)]
    remainder: DiffPoly

    def check(self, f: DiffPoly, chain: Chain) -> bool:
        total = self.remainder
        for i, k, q in self.terms:
            total = total + q * chain.elements[i].transform(k)
        return total == self.multiplier * f


def diff_prem_witness(f: DiffPoly, chain: Chain) -> DiffWitness:
    """Difference pseudo-remainder with its exact certificate."""
    if not len(chain) or f.is_zero():
        return DiffWitness(ONE, [], f)
    orders: dict[VarIdentity, Optional[int]] = {
        ident: f.order_in(ident) for ident in chain.leading_identities()
    }
    for _ in range(_MAX_REDUCTION_PASSES):
        seq = prolong(chain, orders)
        wit = algebraic_prem_witness(
            f, [m.poly for m in seq], [m.leader for m in seq]
        )
        r = wit.remainder
        if r.is_zero() or all(
            is_reduced(r, a, chain.ranking) for a in chain.elements
        ):
            terms = [
                (m.source, m.shift, q)
                for m, q in zip(seq, wit.quotients)
                if not q.is_zero()
            ]
            return DiffWitness(wit.multiplier, terms, r)
        for ident in orders:  # initials raised some order: prolong further
            o = r.order_in(ident)
            cur = orders[ident]
            orders[ident] = o if cur is None else (cur if o is None else max(cur, o))
            orders[ident] = (orders[ident] or 0) + 1
    raise ChainError("difference reduction did not stabilize")


def diff_prem(f: DiffPoly, chain: Chain) -> DiffPoly:
    """Difference pseudo-remainder of f with respect to an ascending
    chain; the result is reduced with respect to the chain."""
    return diff_prem_witness(f, chain).remainder
