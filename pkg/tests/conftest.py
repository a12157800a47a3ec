"""Shared builders for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from diffalg.errors import ChainError
from diffalg.poly import MAIN, DiffPoly, Monomial, main_var, param_var
from diffalg.ranking import Ranking
from diffalg.reduction import Chain


def Y(j: int, k: int = 0) -> DiffPoly:
    return DiffPoly.var(main_var(j, k))


def U(i: int, j: int, k: int = 0) -> DiffPoly:
    return DiffPoly.var(param_var(i, j, k))


def main_ranking(n: int) -> Ranking:
    return Ranking.orderly([(MAIN, None, j) for j in range(1, n + 1)])


@pytest.fixture
def R1() -> Ranking:
    return main_ranking(1)


@pytest.fixture
def R2() -> Ranking:
    return main_ranking(2)


@pytest.fixture
def circle_chain(R1) -> Chain:
    """sat(y1^2 + 1, y1@1 - y1): the base zero-dimensional example."""
    return Chain([Y(1) ** 2 + 1, Y(1, 1) - Y(1)], R1)


@pytest.fixture
def two_var_chain(R2) -> Chain:
    """The dimension-zero, order-one example in two variables."""
    return Chain([Y(1, 1) - Y(1), Y(2) ** 2 - Y(1), Y(2, 1) + Y(2)], R2)


# ---------------------------------------------------------------------
# Randomized inputs for the reduction contract suite
# ---------------------------------------------------------------------


def random_poly(
    rng: random.Random,
    n_vars: int = 2,
    max_shift: int = 2,
    max_deg: int = 3,
    max_terms: int = 5,
) -> DiffPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        pairs = []
        for _ in range(rng.randint(0, max_deg)):
            v = main_var(rng.randint(1, n_vars), rng.randint(0, max_shift))
            pairs.append((v, 1))
        c = Fraction(rng.randint(-9, 9))
        if c == 0:
            c = Fraction(1)
        m = Monomial.make(pairs)
        terms[m] = terms.get(m, Fraction(0)) + c
    p = DiffPoly(terms)
    return p if not p.is_zero() else DiffPoly.one()


def _random_univariate(rng: random.Random, j: int, shift: int, deg: int) -> DiffPoly:
    """deg >= 1 polynomial in y_j^(shift) alone, monic-ish, random lower terms."""
    p = DiffPoly.var(main_var(j, shift), deg)
    for d in range(deg):
        c = rng.randint(-5, 5)
        if c:
            p = p + DiffPoly.var(main_var(j, shift), d).scale(Fraction(c))
    return p


def random_chain(rng: random.Random) -> Chain:
    """A random valid ascending chain over y1, y2 under the orderly
    ranking, drawn from a few structural shapes."""
    R = main_ranking(2)
    shape = rng.randint(0, 3)
    while True:
        try:
            if shape == 0:
                d1 = rng.randint(2, 3)
                return Chain([_random_univariate(rng, 1, 0, d1)], R)
            if shape == 1:
                d1 = rng.randint(2, 3)
                a = _random_univariate(rng, 1, 0, d1)
                b = DiffPoly.var(main_var(1, 1)) - _random_univariate(rng, 1, 0, d1 - 1)
                return Chain([a, b], R)
            if shape == 2:
                d1 = rng.randint(2, 3)
                a = _random_univariate(rng, 1, 0, d1)
                d2 = rng.randint(1, 2)
                b = DiffPoly.var(main_var(2, 0), d2) + _random_univariate(
                    rng, 1, 0, d1 - 1
                ).scale(Fraction(rng.randint(1, 3)))
                return Chain([a, b], R)
            d1 = rng.randint(2, 3)
            a = _random_univariate(rng, 1, 0, d1)
            b = DiffPoly.var(main_var(2, 0), 2) - Y(1)
            c = DiffPoly.var(main_var(2, 1)) + Y(2).scale(Fraction(rng.choice([-1, 1])))
            return Chain([a, b, c], R)
        except ChainError:  # pragma: no cover - shapes above are valid
            shape = 0
