from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffh.clifford import Multivector
from ffh.errors import InvalidBladeError, ParseError, SphericalMonogenicError, UnknownVariableError
from ffh.parsing import parse_holomorphic, parse_monogenic, parse_poly
from ffh.polyalg import BLOCK_X, BLOCK_Y, CartesianPoly, builtin_monogenic
from ffh.transform import NUMERIC_SEEDS, HolomorphicInput


class TestHolomorphic:
    @pytest.mark.parametrize(
        "text,coefficients",
        [
            ("i*z^4", {4: (0, 1)}),
            ("z^4 - 2*z^2", {4: (1, 0), 2: (-2, 0)}),
            ("  3/5 * i * z ^ 2 ", {2: (0, Fraction(3, 5))}),
            ("-z + 1", {1: (-1, 0), 0: (1, 0)}),
            ("i", {0: (0, 1)}),
            ("z^2 - z^2", {}),
        ],
    )
    def test_coefficients(self, text, coefficients):
        assert parse_holomorphic(text).coefficients == coefficients

    @pytest.mark.parametrize("text,position", [("z^-1", 2), ("z**2", 2), ("z + ", 4), ("2 z", 2), ("", 0)])
    def test_syntax_errors_carry_the_position(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_holomorphic(text)
        assert info.value.position == position

    def test_zero_denominator(self):
        with pytest.raises(ParseError) as info:
            parse_holomorphic("1/0*z")
        assert info.value.position == 2

    def test_unknown_character(self):
        with pytest.raises(ParseError) as info:
            parse_holomorphic("z^2 + w")
        assert info.value.position == 6

    def test_named_numeric_seed(self):
        assert parse_holomorphic("1/(1 + z^2)") is NUMERIC_SEEDS["1/(1+z^2)"]
        assert not parse_holomorphic("exp(z)").is_exact

    @settings(max_examples=60)
    @given(
        st.dictionaries(
            st.integers(0, 9),
            st.tuples(
                st.fractions(min_value=-5, max_value=5, max_denominator=6),
                st.fractions(min_value=-5, max_value=5, max_denominator=6),
            ),
            max_size=4,
        )
    )
    def test_text_parses_back(self, coefficients):
        h = HolomorphicInput.exact(coefficients)
        if not h.coefficients:
            return
        assert parse_holomorphic(h.text()).coefficients == h.coefficients


class TestPoly:
    def test_monogenic_candidate(self):
        f = parse_poly("x1 - x2*e12", 3, 0)
        assert f == builtin_monogenic(BLOCK_X, 3, 1).poly

    def test_constant(self):
        assert parse_poly("1", 3, 3) == CartesianPoly.constant(3, 3)

    def test_blades_multiply_in_order(self):
        f = parse_poly("e2*e1", 2, 0)
        assert f == CartesianPoly.constant(2, 0, Multivector(2, {0b11: -1}))

    def test_repeated_variables_add_exponents(self):
        assert parse_poly("x1*x1^2", 3, 0) == parse_poly("x1^3", 3, 0)

    def test_bad_blade(self):
        with pytest.raises(InvalidBladeError):
            parse_poly("x1*e9", 3, 0)

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError):
            parse_poly("y1", 3, 0)

    def test_axis_variable(self):
        f = parse_poly("x0^2 - x1^2", 3, 0, axis=True)
        assert f.variables[0] == "x0"
        with pytest.raises(UnknownVariableError):
            parse_poly("x0", 3, 0)

    def test_syntax_error(self):
        with pytest.raises(ParseError):
            parse_poly("x1 x2", 3, 0)

    def test_zero_denominator(self):
        with pytest.raises(ParseError) as info:
            parse_poly("x1 + 3/00*x2", 3, 0)
        assert info.value.position == 7

    @pytest.mark.parametrize("text", ["x1 - x2*e12", "3/5*x1^2*y1*e14 - y2 + 7", "-x2*e1"])
    def test_text_parses_back(self, text):
        f = parse_poly(text, 3, 3)
        assert parse_poly(f.text(), 3, 3) == f


class TestMonogenic:
    def test_x_block(self):
        pm = parse_monogenic("x1 - x2*e12", BLOCK_X, 3, 1)
        assert pm.degree == 1 and pm.block == BLOCK_X

    def test_y_block_is_written_with_local_generators(self):
        pm = parse_monogenic("y1 - y2*e12", BLOCK_Y, 3, 1)
        assert pm.poly == builtin_monogenic(BLOCK_Y, 3, 1).poly

    def test_rejection(self):
        with pytest.raises(SphericalMonogenicError) as info:
            parse_monogenic("x1", BLOCK_X, 3, 1)
        assert info.value.reason == SphericalMonogenicError.NOT_MONOGENIC

    def test_unknown_block(self):
        with pytest.raises(ValueError):
            parse_monogenic("x1", "z", 3, 1)
