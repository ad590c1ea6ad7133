"""Boundary-renormalized field correlators and their regularized variants."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st
from numpy.testing import assert_allclose

from vacbrownian.correlators import (
    DEFAULT_EXCLUSION_WINDOW,
    Geometry,
    RegulatorSpec,
    corr_normal,
    corr_normal_reg,
    corr_transverse,
    corr_transverse_reg,
    mean_e_squared,
    normal_kernel_complex,
    transverse_kernel_complex,
)
from vacbrownian.errors import LightconeSingularityError

PI_SQ = math.pi ** 2


class TestClosedFormValues:
    # Hand-reduced rational values at simple (dt, z) points.

    def test_coincidence_transverse(self):
        assert_allclose(corr_transverse(0.0, 1.0), 1.0 / (16.0 * PI_SQ), rtol=1e-15)

    def test_coincidence_normal(self):
        assert_allclose(corr_normal(0.0, 1.0), 1.0 / (16.0 * PI_SQ), rtol=1e-15)

    def test_unit_separation_transverse(self):
        # -(1 + 4) / (1 - 4)^3 = 5/27
        assert_allclose(corr_transverse(1.0, 1.0), 5.0 / (27.0 * PI_SQ), rtol=1e-15)

    def test_unit_separation_normal(self):
        # 1 / (1 - 4)^2 = 1/9
        assert_allclose(corr_normal(1.0, 1.0), 1.0 / (9.0 * PI_SQ), rtol=1e-15)

    def test_mean_e_squared(self):
        assert_allclose(mean_e_squared(1.0), 3.0 / (16.0 * PI_SQ), rtol=1e-15)
        assert_allclose(mean_e_squared(2.0), 3.0 / (256.0 * PI_SQ), rtol=1e-15)


class TestIdentitiesAndScaling:
    @given(st.floats(min_value=1e-8, max_value=1e6))
    def test_coincidence_identity(self, z):
        # two transverse components plus the normal one sum to <E^2>
        total = 2.0 * corr_transverse(0.0, z) + corr_normal(0.0, z)
        assert_allclose(total, mean_e_squared(z), rtol=1e-12)

    @given(
        st.floats(min_value=0.0, max_value=10.0).filter(lambda u: abs(u - 2.0) > 0.1),
        st.floats(min_value=1e-6, max_value=1e4),
    )
    def test_z4_scaling(self, u, z):
        # corr(z u, z) = corr(u, 1) / z^4 for both components
        assert_allclose(corr_transverse(z * u, z),
                        corr_transverse(u, 1.0) / z ** 4, rtol=1e-12)
        assert_allclose(corr_normal(z * u, z),
                        corr_normal(u, 1.0) / z ** 4, rtol=1e-12)

    @given(st.floats(min_value=0.0, max_value=10.0).filter(lambda u: abs(u - 2.0) > 0.1))
    def test_even_in_dt(self, u):
        assert corr_transverse(-u, 1.0) == corr_transverse(u, 1.0)
        assert corr_normal(-u, 1.0) == corr_normal(u, 1.0)

    def test_signs(self):
        # transverse flips sign across the lightcone, normal never does
        assert corr_transverse(1.9, 1.0) > 0.0
        assert corr_transverse(2.1, 1.0) < 0.0
        assert corr_normal(1.9, 1.0) > 0.0
        assert corr_normal(2.1, 1.0) > 0.0


class TestSingularityWindow:
    def test_pole_raises(self):
        with pytest.raises(LightconeSingularityError):
            corr_transverse(2.0, 1.0)
        with pytest.raises(LightconeSingularityError):
            corr_normal(2.0, 1.0)

    def test_pole_distance_attribute(self):
        with pytest.raises(LightconeSingularityError) as info:
            corr_transverse(2.0, 1.0)
        assert info.value.pole_distance == 0.0

    def test_window_is_relative(self):
        z = 1e-6
        inside = 2.0 * z * (1.0 + 0.1 * DEFAULT_EXCLUSION_WINDOW)
        outside = 2.0 * z * (1.0 + 10.0 * DEFAULT_EXCLUSION_WINDOW)
        with pytest.raises(LightconeSingularityError):
            corr_transverse(inside, z)
        corr_transverse(outside, z)  # does not raise

    def test_window_override(self):
        dt = 2.0 * (1.0 + 1e-7)
        corr_transverse(dt, 1.0)  # outside default window
        with pytest.raises(LightconeSingularityError):
            corr_transverse(dt, 1.0, window=1e-5)


class TestRegularizedKernels:
    def test_finite_on_the_lightcone(self):
        xx = corr_transverse_reg(2.0, 1.0, 1e-3)
        zz = corr_normal_reg(2.0, 1.0, 1e-3)
        assert math.isfinite(xx)
        assert math.isfinite(zz)

    def test_converges_to_plain_away_from_pole(self):
        for dt in (0.7, 3.1):
            assert_allclose(corr_transverse_reg(dt, 1.0, 1e-8),
                            corr_transverse(dt, 1.0), rtol=1e-6)
            assert_allclose(corr_normal_reg(dt, 1.0, 1e-8),
                            corr_normal(dt, 1.0), rtol=1e-6)

    def test_rejects_nonpositive_eps(self):
        with pytest.raises(ValueError):
            corr_transverse_reg(1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            corr_normal_reg(1.0, 1.0, -1e-3)

    def test_matches_complex_kernel_real_part(self):
        dt, z, eps = 2.3, 1.0, 1e-4
        assert corr_transverse_reg(dt, z, eps) == \
            transverse_kernel_complex(complex(dt, -eps), z).real
        assert corr_normal_reg(dt, z, eps) == \
            normal_kernel_complex(complex(dt, -eps), z).real

    def test_complex_kernel_on_real_axis(self):
        for dt in (0.5, 2.9):
            assert_allclose(transverse_kernel_complex(complex(dt, 0.0), 1.0).real,
                            corr_transverse(dt, 1.0), rtol=1e-14)
            assert_allclose(normal_kernel_complex(complex(dt, 0.0), 1.0).real,
                            corr_normal(dt, 1.0), rtol=1e-14)


class TestSpecs:
    def test_geometry_validation(self):
        Geometry(z=1e-10)
        with pytest.raises(ValueError):
            Geometry(z=0.0)
        with pytest.raises(ValueError):
            Geometry(z=-1.0)

    def test_regulator_ladder(self):
        reg = RegulatorSpec(eps0=1e-2, ratio=0.5, rungs=4)
        assert reg.ladder == (1e-2, 5e-3, 2.5e-3, 1.25e-3)

    def test_regulator_validation(self):
        with pytest.raises(ValueError):
            RegulatorSpec(eps0=0.0)
        with pytest.raises(ValueError):
            RegulatorSpec(eps0=1e-2, ratio=1.0)
        with pytest.raises(ValueError):
            RegulatorSpec(eps0=1e-2, rungs=2)
        with pytest.raises(ValueError):
            RegulatorSpec(eps0=1e-2, rungs=6, order=1)
        with pytest.raises(ValueError):
            RegulatorSpec(eps0=1e-2, rungs=6, order=6)
        RegulatorSpec(eps0=1e-2, rungs=6, order=5)
