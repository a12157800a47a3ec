import random
from fractions import Fraction

import pytest

from diffalg.coeffs import RatFunc
from diffalg.parser import ParseError, parse_poly, tokenize
from diffalg.poly import DiffPoly, main_var, param_var

from conftest import U, Y, random_poly


class TestExamples:
    def test_plain_quadratic(self):
        assert parse_poly("y1^2 + 1") == Y(1) ** 2 + 1

    def test_shift_suffix(self):
        assert parse_poly("y1@1 - y1") == Y(1, 1) - Y(1)

    def test_rational_function_coefficients(self):
        p = parse_poly("x*y1@2 + (x+1)", field="Qx")
        x = RatFunc.x()
        assert p == DiffPoly.const(x) * Y(1, 2) + DiffPoly.const(x + 1)

    def test_parameters(self):
        assert parse_poly("u0_1*y1 + u0_0") == U(0, 1) * Y(1) + U(0, 0)

    def test_fraction_literals(self):
        assert parse_poly("1/2*y1 - 3") == Y(1).scale(Fraction(1, 2)) - 3

    def test_unary_minus_and_parens(self):
        assert parse_poly("-(y1 - 2)^2") == -((Y(1) - 2) ** 2)


class TestErrors:
    def test_syntax_error_with_position(self):
        with pytest.raises(ParseError) as exc:
            parse_poly("y1 + + 1")
        assert exc.value.position == 5

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            parse_poly("w + 1")

    def test_undeclared_main(self):
        with pytest.raises(ParseError):
            parse_poly("y2", mains=[1])

    def test_undeclared_block(self):
        with pytest.raises(ParseError):
            parse_poly("u3_0", param_blocks=[0])

    def test_x_requires_qx(self):
        with pytest.raises(ParseError):
            parse_poly("x + 1", field="Q")

    def test_x_cannot_shift(self):
        with pytest.raises(ParseError):
            parse_poly("x@1", field="Qx")

    def test_division_by_polynomial(self):
        with pytest.raises(ParseError):
            parse_poly("y1 / y1")

    def test_division_by_zero(self):
        with pytest.raises(ParseError):
            parse_poly("y1 / 0")

    def test_unbalanced_parens(self):
        with pytest.raises(ParseError):
            parse_poly("(y1 + 1")


class TestRoundTrip:
    def test_examples(self):
        for text in [
            "y1^2 + 1",
            "y1@1 - y1",
            "u0_1*u0_0@1 - u0_0*u0_1@1",
            "2*y1*y2@2 - 1/3",
        ]:
            p = parse_poly(text)
            assert parse_poly(str(p)) == p

    def test_random_rational_polynomials(self):
        rng = random.Random(77)
        for _ in range(60):
            p = random_poly(rng)
            assert parse_poly(str(p)) == p

    def test_random_qx_polynomials(self):
        rng = random.Random(78)
        x = RatFunc.x()
        for _ in range(30):
            p = random_poly(rng)
            q = p * DiffPoly.const(x**2 - 1) + DiffPoly.const(x)
            assert parse_poly(str(q), field="Qx") == q

    def test_ratio_coefficients(self):
        p = DiffPoly.const(RatFunc((1, 1), (-1, 1))) * Y(1) + 2  # (x+1)/(x-1)
        assert parse_poly(str(p), field="Qx") == p


def test_tokenizer_positions():
    toks = tokenize("y1 + 2")
    assert [(t.kind, t.value) for t in toks] == [
        ("name", "y1"),
        ("op", "+"),
        ("nat", "2"),
    ]
    assert toks[2].pos == 5
