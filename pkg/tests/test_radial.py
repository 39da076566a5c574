from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ffh.clifford import Multivector
from ffh.errors import DomainError, MixedPiPowerError, NotCartesianConvertible
from ffh.polyalg import BLOCK_X, BLOCK_Y, CartesianPoly, builtin_monogenic
from ffh.radial import (
    PROFILE_VARS,
    SECTOR_TABLE,
    SECTORS,
    LaurentBi,
    RadialElement,
    ScalarExt,
    embedded_laplacian,
    harmonic_seed_parts,
    iterated_radial_laplacian,
    ladder_I,
    ladder_II,
    laurent_derivative,
    radial_laplacian,
    to_cartesian,
    vekua_residual_axial,
    vekua_residual_biaxial,
)


def L(terms, var_names=("r", "rho")):
    return LaurentBi(terms, var_names)


@st.composite
def laurents(draw, var_names=("r", "rho")):
    pairs = draw(st.lists(st.tuples(st.integers(-3, 4), st.integers(-3, 4)), max_size=5))
    coefs = draw(st.lists(st.integers(-6, 6), min_size=len(pairs), max_size=len(pairs)))
    return LaurentBi(dict(zip(pairs, coefs)), var_names)


class TestScalarExt:
    def test_pi_powers_must_agree(self):
        with pytest.raises(MixedPiPowerError):
            ScalarExt(1, 1) + ScalarExt(1, 0)

    def test_zero_adds_to_anything(self):
        assert ScalarExt() + ScalarExt(3, 2) == ScalarExt(3, 2)
        assert ScalarExt(0, 0).pi_pow == 0

    def test_canonical_zero(self):
        assert ScalarExt(0, 3) == ScalarExt()

    def test_negative_pi_power(self):
        with pytest.raises(DomainError):
            ScalarExt(1, 1) / ScalarExt(1, 2)

    def test_text(self):
        assert ScalarExt(Fraction(3, 5), 2).text() == "3/5*pi^2"
        assert ScalarExt(-1, 1).text() == "-pi"
        assert ScalarExt(Fraction(-4)).text() == "-4"


class TestLaurent:
    def test_derivatives(self):
        assert laurent_derivative(L({(0, 2): 1}), "second") == L({(0, 1): 2})
        assert laurent_derivative(L({(0, -1): 1}), "rho") == L({(0, -2): -1})
        assert laurent_derivative(L({(0, 3): 1}), "first").is_zero()

    def test_ladder_examples(self):
        f = L({(2, 0): 1, (0, 2): -1}, PROFILE_VARS)
        assert ladder_I(f, "second", 1) == LaurentBi.constant(-2, PROFILE_VARS)
        assert ladder_II(L({(1, 1): 2}, PROFILE_VARS), "rho", 1).is_zero()
        assert ladder_I(f, "second", 0) == f

    def test_text(self):
        assert L({(-2, 4): ScalarExt(Fraction(-8, 3), 1)}).text() == "-8/3*r^-2*rho^4*pi"
        assert LaurentBi.zero().text() == "0"

    def test_evaluation_refuses_the_singular_set(self):
        with pytest.raises(DomainError):
            L({(0, -1): 1}).evaluate(1.0, 0.0)
        assert L({(2, 0): 1}).evaluate(0.0, 0.0) == 0.0

    @settings(deadline=None, max_examples=100)
    @given(laurents(), st.integers(0, 5), st.sampled_from([0, 1]))
    def test_ladder_identities(self, h, n, axis):
        d = lambda f: f.derivative(axis)
        down = (-1, 0) if axis == 0 else (0, -1)
        # i and ii
        assert d(d(ladder_I(h, axis, n))) == ladder_I(d(d(h)), axis, n) - ladder_I(h, axis, n + 1) * (2 * n)
        assert d(d(ladder_II(h, axis, n))) == ladder_II(d(d(h)), axis, n) - ladder_II(h, axis, n + 1) * (2 * n)
        # iii
        assert ladder_II(d(h), axis, n) == d(ladder_I(h, axis, n))
        # iv
        assert ladder_I(d(h), axis, n) - d(ladder_II(h, axis, n)) == ladder_II(h, axis, n).shift(*down) * (2 * n)


class TestRadialLaplacian:
    def test_distance_to_the_axis(self):
        e = RadialElement((3, 3, 0, 0), s1=L({(0, 1): 1}))
        assert radial_laplacian(e).s1 == L({(0, -1): 2})

    def test_unit_vector_sectors(self):
        # x y / rho: x is harmonic, the y-unit vector is not
        e = RadialElement((3, 3, 0, 0), s_wn=L({(1, 0): 1}))
        assert radial_laplacian(e).s_wn == L({(1, -2): -2})

    def test_inner_step_of_the_fourth_power(self):
        e = RadialElement(
            (3, 3, 0, 0),
            s1=L({(4, 0): Fraction(2, 5), (2, 2): -4, (0, 4): 2}),
            s_wn=L({(3, 1): Fraction(-8, 5), (1, 3): Fraction(8, 3)}),
        )
        out = radial_laplacian(e)
        assert out.s1 == L({(2, 0): -16, (0, 2): 16})
        assert out.s_wn == L({(1, 1): Fraction(32, 3)})
        assert out.s_w.is_zero() and out.s_n.is_zero()

    def test_iterated(self):
        e = RadialElement((3, 3, 0, 0), s1=L({(0, 4): 1}))
        assert iterated_radial_laplacian(e, 0) == e
        assert iterated_radial_laplacian(e, 1) == radial_laplacian(e)
        assert iterated_radial_laplacian(e, 2).s1 == LaurentBi.constant(120)
        rho4 = CartesianPoly.norm_squared(3, 3, BLOCK_Y) ** 2
        assert rho4.laplacian().laplacian() == CartesianPoly.constant(3, 3, 120)

    def test_sectors_never_mix(self):
        e = RadialElement((4, 3, 1, 2), s_w=L({(1, 2): 1}), s_n=L({(2, 1): 1}))
        out = radial_laplacian(e)
        assert out.s1.is_zero() and out.s_wn.is_zero()


@st.composite
def convertible_elements(draw):
    p = draw(st.sampled_from([3, 4, 5]))
    q = draw(st.sampled_from([3, 5]))
    k = draw(st.integers(0, 2))
    l = draw(st.integers(0, 2))
    sectors = {}
    for name in SECTORS:
        odd_a = name in ("w", "wn")
        odd_b = name in ("n", "wn")
        terms = {}
        for _ in range(draw(st.integers(0, 2))):
            a = 2 * draw(st.integers(0, 2)) + (1 if odd_a else 0)
            b = 2 * draw(st.integers(0, 2)) + (1 if odd_b else 0)
            terms[(a, b)] = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
        sectors[name] = L(terms)
    return RadialElement((p, q, k, l), *(sectors[n] for n in SECTORS))


class TestCartesianBridge:
    def test_norm_squared(self):
        e = RadialElement((3, 3, 0, 0), s1=L({(2, 0): 1}))
        assert to_cartesian(e) == CartesianPoly.norm_squared(3, 3, BLOCK_X)

    def test_bivector_sector(self):
        e = RadialElement((3, 3, 0, 0), s_wn=L({(1, 1): 1}))
        x = CartesianPoly.vector_variable(3, 3, BLOCK_X)
        y = CartesianPoly.vector_variable(3, 3, BLOCK_Y)
        assert to_cartesian(e) == x * y
        assert all(c.grades() == [2] for _, c in (x * y).items())

    def test_odd_power_of_rho_is_not_polynomial(self):
        with pytest.raises(NotCartesianConvertible) as info:
            to_cartesian(RadialElement((3, 3, 0, 0), s1=L({(0, 1): 1})))
        assert info.value.sector == "1"

    def test_pi_coefficient_is_not_polynomial(self):
        with pytest.raises(NotCartesianConvertible):
            to_cartesian(RadialElement((3, 3, 0, 0), s1=L({(0, 0): ScalarExt(1, 1)})))

    def test_zero_converts_to_zero(self):
        assert to_cartesian(RadialElement((3, 3, 0, 0))).is_zero()

    @pytest.mark.slow
    @settings(deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow])
    @given(convertible_elements())
    def test_radial_and_cartesian_laplacians_agree(self, e):
        p, q, k, l = e.params
        pk = builtin_monogenic(BLOCK_X, p, k)
        pl = builtin_monogenic(BLOCK_Y, q, l)
        assert to_cartesian(radial_laplacian(e), pk, pl) == to_cartesian(e, pk, pl).laplacian()

    def test_sector_table_matches_unit_vectors(self):
        # at r = rho = 1 take w = e1 and n = e4 in R_{0,6}
        units = {
            "1": Multivector.scalar(6, 1),
            "w": Multivector.generator(6, 1),
            "n": Multivector.generator(6, 4),
        }
        units["wn"] = units["w"] * units["n"]
        for (a, b), (sign, result) in SECTOR_TABLE.items():
            assert units[a] * units[b] == units[result] * sign


class TestHarmonicIdentities:
    @pytest.mark.parametrize("q", [3, 5])
    @pytest.mark.parametrize("l", [0, 1, 2])
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("degree", [0, 3, 6, 8])
    def test_embedded_laplacian_powers(self, q, l, n, degree):
        constant = 1
        for j in range(1, n + 1):
            constant *= 2 * l + q - (2 * j - 1)
        for h in harmonic_seed_parts(degree):
            scalar, vector = h, h
            for _ in range(n):
                scalar = embedded_laplacian(scalar, q, l)
                vector = embedded_laplacian(vector, q, l, with_nu=True)
            assert scalar == ladder_I(h, "rho", n) * constant
            assert vector == ladder_II(h, "rho", n) * constant


class TestVekua:
    def test_first_worked_example(self):
        first, second = vekua_residual_biaxial(L({(0, -1): 1}), L({(1, -2): Fraction(-1, 3)}), (3, 3, 0, 0))
        assert first.is_zero() and second.is_zero()

    def test_constant_is_monogenic(self):
        first, second = vekua_residual_biaxial(LaurentBi.constant(5), LaurentBi.zero(), (3, 3, 0, 0))
        assert first.is_zero() and second.is_zero()

    def test_linear_r_is_not(self):
        first, second = vekua_residual_biaxial(L({(1, 0): 1}), LaurentBi.zero(), (3, 3, 0, 0))
        assert first == LaurentBi.constant(1) and second.is_zero()

    def test_axial_cubic_profile(self):
        first, second = vekua_residual_axial(L({(1, 0): -6}, PROFILE_VARS), L({(0, 1): -2}, PROFILE_VARS), 0, 3)
        assert first.is_zero() and second.is_zero()

    def test_axial_residual_of_x0(self):
        first, second = vekua_residual_axial(L({(1, 0): 1}, ("x0", "R")), LaurentBi.zero(("x0", "R")), 0, 3)
        assert first == LaurentBi.constant(1, ("x0", "R")) and second.is_zero()


class TestRadialElement:
    def test_leading_coefficient_follows_sector_order(self):
        e = RadialElement((3, 3, 0, 0), s1=L({(0, 2): 5, (2, 0): -1}), s_wn=L({(1, 1): 7}))
        assert e.leading_coefficient() == ScalarExt(5)
        assert RadialElement((3, 3, 0, 0)).leading_coefficient() is None

    def test_text(self):
        e = RadialElement((3, 3, 0, 0), s1=L({(0, -1): 1}), s_wn=L({(1, -2): Fraction(-1, 3)}))
        assert e.text() == "(rho^-1) + (-1/3*r*rho^-2)*wn"

    def test_axial_elements_have_no_omega_sectors(self):
        with pytest.raises(DomainError):
            RadialElement((1, 3, 0, 0), s_w=L({(1, 0): 1}), axial=True)

    def test_mixing_params_is_an_error(self):
        with pytest.raises(DomainError):
            RadialElement((3, 3, 0, 0)) + RadialElement((3, 5, 0, 0))
