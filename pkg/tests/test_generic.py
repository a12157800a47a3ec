import itertools
import random
from math import comb

import pytest

from diffalg.charset import char_set
from diffalg.errors import UnitIdealError, VerificationError
from diffalg.generic import (
    apply_transform,
    generic_system_stats,
    intersect_generic,
    make_generic_poly,
    make_hyperplanes,
    make_linear_transform,
    monomial_support,
    random_specialization,
    transformed_ranking,
)
from diffalg.poly import MAIN, DiffPoly, Monomial, main_var, param_var
from diffalg.ranking import Ranking
from diffalg.reduction import Chain

from conftest import U, Y, main_ranking


class TestHyperplanes:
    def test_single_variable(self):
        hyps = make_hyperplanes(1, 1)
        assert hyps[0].poly == U(0, 0) + U(0, 1) * Y(1)

    def test_two_variables(self):
        hyps = make_hyperplanes(2, 1)
        assert hyps[0].poly == U(0, 0) + U(0, 1) * Y(1) + U(0, 2) * Y(2)

    def test_disjoint_blocks(self):
        h0, h1 = make_hyperplanes(1, 2)
        assert h0.block != h1.block
        assert not (set(h0.coefficients) & set(h1.coefficients))


class TestGenericPoly:
    def test_hyperplane_shape(self):
        g = make_generic_poly(1, 0, 1)
        mons = set(g.monomials)
        assert mons == {Monomial.make(()), Monomial.of(main_var(1))}

    def test_order_one_degree_one(self):
        g = make_generic_poly(1, 1, 1)
        assert set(g.monomials) == {
            Monomial.make(()),
            Monomial.of(main_var(1)),
            Monomial.of(main_var(1, 1)),
        }

    def test_order_one_degree_two_support(self):
        g = make_generic_poly(1, 1, 2)
        y, ys = main_var(1), main_var(1, 1)
        expected = {
            Monomial.make(()),
            Monomial.of(y),
            Monomial.of(ys),
            Monomial.of(y, 2),
            Monomial.make([(y, 1), (ys, 1)]),
            Monomial.of(ys, 2),
        }
        assert set(g.monomials) == expected

    @pytest.mark.parametrize("n,s,r", [(1, 0, 1), (1, 2, 2), (2, 1, 1), (2, 1, 2), (3, 0, 2)])
    def test_support_count(self, n, s, r):
        assert len(monomial_support(n, s, r)) == comb(n * (s + 1) + r, r)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            make_generic_poly(1, 0, 0)

    def test_one_fresh_coefficient_per_monomial(self):
        g = make_generic_poly(2, 1, 2)
        assert len(set(g.coefficients)) == len(g.monomials)


class TestIntersectGeneric:
    @pytest.mark.parametrize("s,r", [(0, 1), (1, 1), (1, 2), (2, 1)])
    def test_dimension_drop_and_order(self, R1, s, r):
        res = intersect_generic(Chain([], R1), make_generic_poly(1, s, r))
        assert (res.dim, res.order) == (0, s)

    def test_hyperplane_case(self, R1):
        hyp = make_hyperplanes(1, 1)[0]
        res = intersect_generic(Chain([], R1), hyp)
        assert (res.dim, res.order) == (0, 0)

    def test_zero_dimensional_input_is_unit_ideal(self, circle_chain):
        with pytest.raises((UnitIdealError, VerificationError)):
            intersect_generic(circle_chain, make_generic_poly(1, 0, 1))

    def test_two_variable_free_ideal(self, R2):
        res = intersect_generic(Chain([], R2), make_generic_poly(2, 1, 2))
        assert (res.dim, res.order) == (1, 1)


class TestGenericSystemStats:
    def test_two_equations(self):
        assert generic_system_stats(2, (0, 1)) == (0, 1)

    def test_single_equation(self):
        assert generic_system_stats(1, (1,)) == (0, 1)

    def test_empty_system(self):
        assert generic_system_stats(2, ()) == (2, 0)

    def test_overdetermined_rejected(self):
        with pytest.raises(ValueError):
            generic_system_stats(1, (0, 0))

    def test_sum_of_orders(self):
        assert generic_system_stats(2, (1, 2)) == (0, 3)


class TestApplyTransform:
    def test_identity_specialization_fixes_generators(self):
        T = make_linear_transform(1)
        gens = apply_transform(T, [Y(1) ** 2 + 1])
        z1 = main_var(2)
        assert DiffPoly.var(z1) ** 2 + 1 in gens
        assert Y(1) - U(0, 1) * DiffPoly.var(z1) in gens

    def test_line_through_origin_fixed(self):
        T = make_linear_transform(1)
        gens = apply_transform(T, [Y(1)])
        res = char_set(gens, transformed_ranking(T))
        assert (res.dim, res.order) == (0, 0)

    def test_dim_and_order_preserved(self, two_var_chain):
        T = make_linear_transform(2)
        gens = apply_transform(T, list(two_var_chain))
        res = char_set(gens, transformed_ranking(T))
        assert (res.dim, res.order) == (0, 1)

    def test_free_ideal_keeps_dimension(self, R1):
        T = make_linear_transform(1)
        gens = apply_transform(T, [])
        res = char_set(gens, transformed_ranking(T))
        assert (res.dim, res.order) == (1, 0)

    def test_base_example_preserved(self, circle_chain):
        T = make_linear_transform(1)
        gens = apply_transform(T, list(circle_chain))
        res = char_set(gens, transformed_ranking(T))
        assert (res.dim, res.order) == (0, 0)


def test_random_specialization_is_deterministic():
    g = make_generic_poly(2, 1, 2)
    a = random_specialization(g.poly, random.Random(5))
    b = random_specialization(g.poly, random.Random(5))
    assert a == b
    assert all(v.kind == MAIN for v in a.variables())
