"""Generic hyperplanes, generic difference polynomials and generic linear
transformations, with executable checks of the intersection theorems."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .charset import CharSetResult, char_set
from .errors import UnitIdealError, VerificationError
from .poly import (
    DiffPoly,
    DiffVar,
    MAIN,
    MONOMIAL_KEY,
    Monomial,
    main_var,
    param_var,
    substitute,
)
from .ranking import Ranking
from .reduction import Chain, chain_stats


@dataclass(frozen=True)
class GenericHyperplane:
    block: int
    coefficients: tuple[DiffVar, ...]  # u_{i0}, ..., u_{in}
    poly: DiffPoly

    @property
    def order(self) -> int:
        return 0


@dataclass(frozen=True)
class GenericDiffPoly:
    order: int
    degree: int
    block: int
    coefficients: tuple[DiffVar, ...]  # one per monomial, aligned
    monomials: tuple[Monomial, ...]
    poly: DiffPoly


@dataclass(frozen=True)
class GenericLinearTransform:
    n: int
    matrix: tuple[tuple[DiffVar, ...], ...]  # entries u_{ij}, 1-based i,j
    aux_offset: int  # image coordinates are main variables aux_offset + j


def make_hyperplanes(n: int, count: int, *, start_block: int = 0) -> list[GenericHyperplane]:
    """``count`` generic hyperplanes u_{i0} + u_{i1} y_1 + ... + u_{in} y_n
    with pairwise disjoint fresh coefficient blocks."""
    if count < 1:
        raise ValueError("at least one hyperplane is required")
    out = []
    for i in range(start_block, start_block + count):
        coeffs = tuple(param_var(i, j) for j in range(n + 1))
        p = DiffPoly.var(coeffs[0])
        for j in range(1, n + 1):
            p = p + DiffPoly.var(coeffs[j]) * DiffPoly.var(main_var(j))
        out.append(GenericHyperplane(i, coeffs, p))
    return out


def monomial_support(n: int, s: int, r: int) -> list[Monomial]:
    """All difference monomials in y_1..y_n of order <= s and degree <= r,
    including 1, in canonical order."""
    gens = [main_var(j, k) for j in range(1, n + 1) for k in range(s + 1)]
    out = {Monomial.make(())}
    for d in range(1, r + 1):
        for combo in itertools.combinations_with_replacement(gens, d):
            out.add(Monomial.make((v, 1) for v in combo))
    return sorted(out, key=MONOMIAL_KEY)


def make_generic_poly(n: int, s: int, r: int, *, block: int = 0) -> GenericDiffPoly:
    """The generic difference polynomial of order s and degree r: one
    fresh coefficient per monomial of order <= s, degree <= r."""
    if r <= 0:
        raise ValueError("generic polynomials need positive degree")
    support = monomial_support(n, s, r)
    coeffs = tuple(param_var(block, i) for i in range(len(support)))
    terms = {m: Fraction(1) for m in support}
    p = DiffPoly.zero()
    for c, m in zip(coeffs, support):
        p = p + DiffPoly({m.mul(Monomial.of(c)): Fraction(1)})
    return GenericDiffPoly(s, r, block, coeffs, tuple(support), p)


def make_linear_transform(n: int, *, start_block: int = 0) -> GenericLinearTransform:
    """An n x n matrix of fresh transformally independent parameters."""
    matrix = tuple(
        tuple(param_var(start_block + i - 1, j) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return GenericLinearTransform(n, matrix, n)


def apply_transform(
    T: GenericLinearTransform, gens: Iterable[DiffPoly]
) -> list[DiffPoly]:
    """Generators of the image variety under Y = U Z: the originals in the
    preimage coordinates z, plus the linear relations y_i = sum_j u_ij z_j.

    The inverse transformation is never formed; the z variables are the
    preimage coordinates adjoined as fresh main variables."""
    n = T.n
    z = [main_var(T.aux_offset + j) for j in range(1, n + 1)]
    binding = {j: DiffPoly.var(z[j - 1]) for j in range(1, n + 1)}
    out = [substitute(g, binding) for g in gens]
    for i in range(1, n + 1):
        rel = DiffPoly.var(main_var(i))
        for j in range(1, n + 1):
            rel = rel - DiffPoly.var(T.matrix[i - 1][j - 1]) * DiffPoly.var(z[j - 1])
        out.append(rel)
    return out


def transformed_ranking(T: GenericLinearTransform) -> Ranking:
    """Orderly ranking on (z, y): preimage coordinates tie-break lowest."""
    idents = [(MAIN, None, T.aux_offset + j) for j in range(1, T.n + 1)]
    idents += [(MAIN, None, j) for j in range(1, T.n + 1)]
    return Ranking.orderly(idents)


def intersect_generic(
    chain: Chain, g: Union[GenericDiffPoly, GenericHyperplane]
) -> CharSetResult:
    """Characteristic set of [chain, g] with g's coefficients adjoined as
    parameters below the main variables.

    For a prime input of dimension d > 0 and order h this has dimension
    d-1 and order h + ord(g); for d = 0 the unit ideal is reported."""
    stats = chain_stats(chain)
    d = len(stats.parametric_set)
    system = list(chain) + [g.poly]
    result = char_set(system, chain.ranking)
    if d == 0:
        raise VerificationError(
            "a zero-dimensional ideal plus a generic polynomial must give "
            "the unit ideal, but a characteristic set was found"
        )
    return result


def generic_system_stats(
    n: int, orders: Sequence[int], degrees: Optional[Sequence[int]] = None
) -> tuple[int, int]:
    """(dim, order) of the system of r independent generic difference
    polynomials with the given orders (degree 1 unless specified)."""
    r = len(orders)
    if r > n:
        raise ValueError("more generic polynomials than variables")
    if r == 0:
        return (n, 0)
    if degrees is None:
        degrees = [1] * r
    polys = [
        make_generic_poly(n, s, deg, block=i).poly
        for i, (s, deg) in enumerate(zip(orders, degrees))
    ]
    ranking = Ranking.orderly([(MAIN, None, j) for j in range(1, n + 1)])
    result = char_set(polys, ranking)
    return (result.dim, result.order)


def random_specialization(
    p: DiffPoly, rng: random.Random, *, bound: int = 50
) -> DiffPoly:
    """Replace every parameter variable by a random rational; a fast
    numeric pre-screen, never a substitute for the exact checks."""
    assignment = {}
    for v in p.variables():
        if v.kind != MAIN:
            assignment[v] = DiffPoly.const(Fraction(rng.randint(-bound, bound), rng.randint(1, 7)))
    if not assignment:
        return p
    out = DiffPoly.zero()
    for m, c in p.terms.items():
        term = DiffPoly.const(c)
        for v, e in m:
            term = term * (assignment.get(v, DiffPoly.var(v))) ** e
        out = out + term
    return out
