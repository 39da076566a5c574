from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffh.errors import DomainError, StencilOutsideDomainError
from ffh.parsing import parse_monogenic
from ffh.polyalg import BLOCK_X, BLOCK_Y, CartesianPoly, builtin_monogenic
from ffh.radial import AXIAL_VARS, PROFILE_VARS, LaurentBi, ScalarExt, to_cartesian, vekua_residual_axial
from ffh.transform import (
    HOMOGENEOUS,
    NON_POLYNOMIAL,
    NUMERIC_SEEDS,
    ZERO,
    Classification,
    HolomorphicInput,
    NumericField,
    biaxial_transform,
    biaxial_transform_numeric,
    classify_power,
    extract_uv,
    fuesom_profiles,
    fueter_axial,
    funk_hecke_profile,
    monogenicity_sweep,
    normalize,
    worked_examples,
    verify_monogenic,
)

IZ = HolomorphicInput.power(1, 0, 1)
Z4 = HolomorphicInput.power(4)


def theta_rho(terms):
    return LaurentBi(terms, PROFILE_VARS)


class TestHolomorphicInput:
    def test_terms_cancel(self):
        h = HolomorphicInput.exact({2: 1}) + HolomorphicInput.exact({2: -1, 1: (0, 3)})
        assert h.coefficients == {1: (0, 3)}

    def test_text(self):
        assert HolomorphicInput.power(2, Fraction(3, 5), 0).scale(0, 1).text() == "3/5*i*z^2"
        assert (HolomorphicInput.power(4) + HolomorphicInput.power(0, -2)).text() == "z^4 - 2"

    def test_negative_power(self):
        with pytest.raises(DomainError):
            HolomorphicInput.exact({-1: 1})

    def test_complex_floats_are_not_exact(self):
        with pytest.raises(DomainError):
            HolomorphicInput.exact({1: 1j})


class TestExtractUV:
    def test_examples(self):
        assert extract_uv(HolomorphicInput.power(2)) == (theta_rho({(2, 0): 1, (0, 2): -1}), theta_rho({(1, 1): 2}))
        assert extract_uv(IZ) == (theta_rho({(0, 1): -1}), theta_rho({(1, 0): 1}))
        assert extract_uv(Z4) == (
            theta_rho({(4, 0): 1, (2, 2): -6, (0, 4): 1}),
            theta_rho({(3, 1): 4, (1, 3): -4}),
        )

    def test_numeric_seed_is_rejected(self):
        with pytest.raises(DomainError):
            extract_uv(NUMERIC_SEEDS["exp(z)"])

    @settings(deadline=None, max_examples=50)
    @given(st.dictionaries(st.integers(0, 8), st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=4))
    def test_cauchy_riemann(self, coefficients):
        u, v = extract_uv(HolomorphicInput.exact(coefficients))
        assert u.derivative(0) == v.derivative(1)
        assert u.derivative(1) == -v.derivative(0)


class TestFunkHeckeProfile:
    def test_first_order_seed(self):
        profile = funk_hecke_profile(IZ, 3, 0)
        assert profile.A == LaurentBi({(0, 1): -2})
        assert profile.B == LaurentBi({(1, 0): Fraction(2, 3)})

    def test_fourth_power(self):
        profile = funk_hecke_profile(Z4, 3, 0)
        assert profile.A == LaurentBi({(4, 0): Fraction(2, 5), (2, 2): -4, (0, 4): 2})
        assert profile.B == LaurentBi({(3, 1): Fraction(8, 5), (1, 3): Fraction(-8, 3)})

    def test_parity_mismatch_vanishes(self):
        profile = funk_hecke_profile(HolomorphicInput.power(3), 3, 0)
        assert profile.A.is_zero() and profile.B.is_zero()

    @pytest.mark.parametrize("n", range(9))
    @pytest.mark.parametrize("k", range(3))
    def test_no_negative_powers_of_r(self, n, k):
        profile = funk_hecke_profile(HolomorphicInput.power(n), 4, k)
        assert not profile.A.has_negative_powers(0)
        assert not profile.B.has_negative_powers(0)

    def test_needs_p_at_least_three(self):
        with pytest.raises(DomainError):
            funk_hecke_profile(Z4, 2, 0)


class TestBiaxialTransform:
    def test_first_worked_example(self):
        res = biaxial_transform(IZ, 3, 3, 0, 0)
        assert res.normalization == ScalarExt(-4)
        assert res.normalized.s1 == LaurentBi({(0, -1): 1})
        assert res.normalized.s_wn == LaurentBi({(1, -2): Fraction(-1, 3)})
        assert res.cartesian is None
        assert res.classification == Classification(NON_POLYNOMIAL)

    def test_fourth_power(self):
        res = biaxial_transform(Z4, 3, 3, 0, 0)
        x = CartesianPoly.vector_variable(3, 3, BLOCK_X)
        y = CartesianPoly.vector_variable(3, 3, BLOCK_Y)
        assert res.normalization == ScalarExt(16)
        assert res.M == LaurentBi({(2, 0): -16, (0, 2): 16})
        assert res.cartesian == x * x + (x * y) * Fraction(2, 3) - y * y
        assert res.classification == Classification(HOMOGENEOUS, 2)

    def test_imaginary_fourth_power_in_four_dimensions(self):
        res = biaxial_transform(HolomorphicInput.power(4, 0, 1), 4, 3, 1, 0)
        assert res.normalization == ScalarExt(3, 1)
        assert res.cartesian is None

    def test_seventh_power_with_a_first_order_monogenic(self):
        res = biaxial_transform(HolomorphicInput.power(7), 3, 3, 1, 0)
        assert res.classification == Classification(HOMOGENEOUS, 4)

    def test_parity_mismatch_is_zero(self):
        res = biaxial_transform(HolomorphicInput.power(3), 3, 3, 0, 0)
        assert res.radial.is_zero()
        assert res.classification == Classification(ZERO)
        assert res.normalization == ScalarExt(1)
        assert res.notes

    def test_raw_value_is_kept(self):
        res = biaxial_transform(Z4, 3, 3, 0, 0)
        assert res.radial == res.normalized * res.normalization

    def test_normalizing_twice_changes_nothing(self):
        res = biaxial_transform(Z4, 3, 3, 0, 0)
        again = normalize(replace(res, radial=res.normalized))
        assert again.normalization == ScalarExt(1)
        assert again.normalized == res.normalized

    @pytest.mark.parametrize("p,q", [(3, 4), (2, 3)])
    def test_dimension_preconditions(self, p, q):
        with pytest.raises(DomainError):
            biaxial_transform(Z4, p, q, 0, 0)

    def test_numeric_seed_needs_the_numeric_path(self):
        with pytest.raises(DomainError):
            biaxial_transform(Z4.to_numeric(), 3, 3, 0, 0)

    def test_monogenic_must_match_k(self):
        with pytest.raises(DomainError):
            biaxial_transform(Z4, 3, 3, 1, 0, builtin_monogenic(BLOCK_X, 3, 2))

    @settings(deadline=None, max_examples=25)
    @given(
        st.integers(0, 7),
        st.integers(0, 7),
        st.fractions(min_value=-3, max_value=3, max_denominator=5),
        st.fractions(min_value=-3, max_value=3, max_denominator=5),
        st.sampled_from([0, 1]),
    )
    def test_linear_in_the_seed(self, n1, n2, a, b, k):
        h1 = HolomorphicInput.power(n1)
        h2 = HolomorphicInput.power(n2, 0, 1)
        combined = biaxial_transform(h1.scale(a) + h2.scale(b), 3, 3, k, 0).radial
        parts = biaxial_transform(h1, 3, 3, k, 0).radial * a + biaxial_transform(h2, 3, 3, k, 0).radial * b
        assert combined == parts


class TestClassification:
    @pytest.mark.parametrize(
        "n,k,l,p,q,expected",
        [
            (4, 0, 0, 3, 3, Classification(HOMOGENEOUS, 2)),
            (7, 1, 0, 3, 3, Classification(HOMOGENEOUS, 4)),
            (3, 0, 0, 3, 3, Classification(ZERO)),
            (1, 1, 0, 3, 3, Classification(ZERO)),
        ],
    )
    def test_examples(self, n, k, l, p, q, expected):
        assert classify_power(n, k, l, p, q) == expected

    def test_text(self):
        assert classify_power(7, 1, 0, 3, 3).text() == "Homogeneous(4)"
        assert classify_power(3, 0, 0, 3, 3).text() == "Zero"

    def test_small_sweep_agrees(self):
        cases = monogenicity_sweep(n_max=6, k_max=1, l_max=0, ps=(3,), qs=(3,))
        assert len(cases) == 14
        assert all(c.passed for c in cases)

    @pytest.mark.slow
    def test_full_sweep(self):
        failed = [c for c in monogenicity_sweep() if not c.passed]
        assert not failed


class TestAxialConstructions:
    def test_profile_examples(self):
        assert fuesom_profiles(HolomorphicInput.power(3), 3, 0) == (theta_rho({(1, 0): -6}), theta_rho({(0, 1): -2}))
        assert fuesom_profiles(HolomorphicInput.power(2), 3, 0) == (theta_rho({(0, 0): -2}), theta_rho({}))
        M, N = fuesom_profiles(HolomorphicInput.power(1), 3, 0)
        assert M.is_zero() and N.is_zero()

    def test_profiles_need_odd_q(self):
        with pytest.raises(DomainError):
            fuesom_profiles(Z4, 4, 0)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(0, 8), st.sampled_from([3, 5]), st.integers(0, 2))
    def test_profiles_solve_the_vekua_system(self, n, q, l):
        M, N = fuesom_profiles(HolomorphicInput.power(n), q, l)
        first, second = vekua_residual_axial(M, N, l, q)
        assert first.is_zero() and second.is_zero()

    def test_fueter_cubic(self):
        e = fueter_axial(HolomorphicInput.power(3), 3)
        assert e.s1 == LaurentBi({(1, 0): -12}, AXIAL_VARS)
        assert e.s_n == LaurentBi({(0, 1): -4}, AXIAL_VARS)

    @pytest.mark.parametrize("n", [0, 1])
    def test_fueter_kills_low_degrees(self, n):
        assert fueter_axial(HolomorphicInput.power(n), 3).is_zero()

    @settings(deadline=None, max_examples=30)
    @given(st.integers(0, 8), st.sampled_from([3, 5]), st.integers(0, 2))
    def test_fueter_solves_the_axial_vekua_system(self, n, m, k):
        e = fueter_axial(HolomorphicInput.power(n), m, k=k)
        first, second = vekua_residual_axial(e.s1, e.s_n, k, m)
        assert first.is_zero() and second.is_zero()

    @settings(deadline=None, max_examples=25)
    @given(st.integers(0, 9), st.sampled_from([3, 5]))
    def test_fueter_is_monogenic_in_cartesian_form(self, n, m):
        f = to_cartesian(fueter_axial(HolomorphicInput.power(n), m))
        assert f.axis and f.p == m
        assert f.dirac().is_zero()

    @pytest.mark.parametrize("n,m", [(4, 3), (6, 3), (7, 5)])
    def test_fueter_with_an_explicit_monogenic(self, n, m):
        pk = parse_monogenic("x1 - x2*e12", BLOCK_X, m, 1)
        e = fueter_axial(HolomorphicInput.power(n, 1, 1), m, pk)
        f = to_cartesian(e, pk)
        assert not f.is_zero()
        assert f.dirac().is_zero()

    def test_fueter_rejects_a_mismatched_monogenic(self):
        with pytest.raises(DomainError):
            fueter_axial(Z4, 3, builtin_monogenic(BLOCK_X, 5, 1))

    def test_fueter_needs_odd_m(self):
        with pytest.raises(DomainError):
            fueter_axial(Z4, 4)


class TestNumericPath:
    @pytest.mark.parametrize("h,point", [(IZ, (1.0, 1.0)), (Z4, (2.0, 1 / 3))])
    def test_agrees_with_the_exact_path(self, h, point):
        exact = biaxial_transform(h, 3, 3, 0, 0)
        sample = biaxial_transform_numeric(h.to_numeric(), 3, 3, 0, 0, point)
        assert sample.M == pytest.approx(exact.M.evaluate(*point), rel=1e-7)
        assert sample.N == pytest.approx(exact.N.evaluate(*point), rel=1e-7)
        assert not sample.flagged

    def test_agrees_at_random_points(self):
        h = HolomorphicInput.power(5, 0, 1) + HolomorphicInput.power(2, 3)
        exact = biaxial_transform(h, 3, 3, 1, 0)
        field = NumericField(h, 3, 3, 1, 0)
        rng = np.random.default_rng(7)
        r, rho = rng.uniform(0.5, 2.0, 10), rng.uniform(0.5, 2.0, 10)
        M, N = field.sectors(r, rho)
        for j in range(10):
            scale = max(1.0, abs(exact.M.evaluate(r[j], rho[j])), abs(exact.N.evaluate(r[j], rho[j])))
            assert abs(M[j] - exact.M.evaluate(r[j], rho[j])) <= 1e-7 * scale
            assert abs(N[j] - exact.N.evaluate(r[j], rho[j])) <= 1e-7 * scale

    def test_point_off_the_domain(self):
        with pytest.raises(DomainError):
            biaxial_transform_numeric(Z4, 3, 3, 0, 0, (0.0, 1.0))

    def test_stencil_outside_the_validity_region(self):
        with pytest.raises(StencilOutsideDomainError):
            biaxial_transform_numeric(NUMERIC_SEEDS["1/(1+z^2)"], 3, 3, 0, 0, (0.5, 0.8))


class TestVerification:
    def test_exact_fourth_power(self):
        report = verify_monogenic(biaxial_transform(Z4, 3, 3, 0, 0))
        assert report.passed
        assert {c.name for c in report.checks} == {"vekua", "dirac"}

    def test_laurent_result_uses_the_vekua_system(self):
        report = verify_monogenic(biaxial_transform(IZ, 3, 3, 0, 0))
        assert report.passed
        dirac = next(c for c in report.checks if c.name == "dirac")
        assert dirac.residual == "n/a"

    def test_numeric_field(self):
        report = verify_monogenic(NumericField(Z4, 3, 3, 0, 0))
        assert report.passed


class TestWorkedExamples:
    @pytest.fixture(scope="class")
    def examples(self):
        return worked_examples()

    def test_all_pass(self, examples):
        assert len(examples) == 5
        failed = [e.name for e in examples if not e.passed]
        assert not failed

    def test_recorded_scalars(self, examples):
        scalars = {e.name: e.scalar for e in examples}
        assert scalars["Ft_3,3[iz, 1, 1]"] == "-4"
        assert scalars["Ft_3,3[z^4, 1, 1]"] == "16"
        assert scalars["Ft_4,3[iz^4, P_1(x), 1]"] == "3*pi"
