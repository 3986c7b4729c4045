# Copyright © 2024, the sharpest developers.
# All rights reserved.
#
# sharpest is licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0.
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest

from sharpest.numerics.errors import DomainError, NonFiniteIntegrandError, ToleranceNotMetError
from sharpest.numerics.kernel import (BallPoint, KernelParams, kernel_power_integral, kernel_values, kernel_zonal,
                                      sphere_power_integral)
from sharpest.numerics.sphere_oracle import (Method, QuadratureSpec, ZonalIntegrand, kernel_q_norm_oracle,
                                             mc_sphere_integral, sphere_samples, zonal_integral,
                                             zonal_integral_with_error, zonal_measure_constant)

def test_measure_constant():
    assert zonal_measure_constant(3) == pytest.approx(0.5, rel=1e-13)
    assert zonal_measure_constant(2) == pytest.approx(1.0 / np.pi, rel=1e-13)

@pytest.mark.parametrize('n', [3, 4, 5, 8])
def test_zonal_moments(n, quad_spec):
    assert zonal_integral(ZonalIntegrand(np.ones_like, n), quad_spec) == pytest.approx(1.0, rel=1e-12)
    assert zonal_integral(ZonalIntegrand(lambda t: t, n), quad_spec) == pytest.approx(0.0, abs=1e-12)
    assert zonal_integral(ZonalIntegrand(lambda t: t ** 2, n), quad_spec) == pytest.approx(1.0 / n, rel=1e-12)

@pytest.mark.parametrize('n,beta,q,r', [(3, 3.0, 2.0, 0.5), (4, 6.0, 1.5, 0.7), (5, 6.5, 1.25, 0.9)])
def test_kernel_q_norm(n, beta, q, r, quad_spec):
    params = KernelParams.from_beta(n, beta)
    expected = kernel_power_integral(params, q, r)
    assert kernel_q_norm_oracle(params, q, r, quad_spec) == pytest.approx(expected, rel=1e-8)

@pytest.mark.parametrize('n', [3, 4, 5])
def test_power_integral_identity(n, quad_spec):
    for lam in (1.0, n / 2.0, n - 1.0, 1.7, 3.3):
        for r in (0.0, 0.3, 0.7, 0.95):
            g = ZonalIntegrand(lambda t, lam=lam, r=r: (1.0 + r * r - 2.0 * r * t) ** (-lam), n)
            value = zonal_integral(g, quad_spec)
            expected = sphere_power_integral(lam, n, r)
            assert abs(value - expected) <= 1e-8 * max(1.0, abs(expected)), (lam, r)

def test_error_estimate(quad_spec):
    (value, error) = zonal_integral_with_error(ZonalIntegrand(np.exp, 3), quad_spec)
    assert value == pytest.approx(np.sinh(1.0), rel=1e-12)
    assert 0.0 <= error <= quad_spec.tolerance(value)

def test_tolerance_not_met():
    params = KernelParams.harmonic(3)
    spec = QuadratureSpec(max_subdivisions=1, panel_order=4)
    with pytest.raises(ToleranceNotMetError) as e:
        kernel_q_norm_oracle(params, 2.0, 0.99, spec)
    assert e.value.estimate > 0

def test_non_finite(quad_spec):
    with pytest.raises(NonFiniteIntegrandError):
        zonal_integral(ZonalIntegrand(lambda t: np.full_like(t, np.nan), 3), quad_spec)
    with pytest.raises(NonFiniteIntegrandError):
        mc_sphere_integral(lambda p: np.full(len(p), np.inf), 3, QuadratureSpec(Method.MONTE_CARLO, mc_samples=1000))

def test_spec_validation():
    assert QuadratureSpec('monte_carlo').method == Method.MONTE_CARLO
    with pytest.raises(DomainError):
        QuadratureSpec(mc_samples=10)
    with pytest.raises(DomainError):
        QuadratureSpec(seed=-1)
    with pytest.raises(DomainError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureSpec(threads=0)
    with pytest.raises(ValueError):
        QuadratureSpec('simpson')

def test_sphere_samples():
    points = sphere_samples(3, 2, 100, 4)
    assert points.shape == (100, 4)
    np.testing.assert_allclose(np.linalg.norm(points, axis=1), 1.0, rtol=1e-14)
    np.testing.assert_array_equal(points, sphere_samples(3, 2, 100, 4))
    assert not np.array_equal(points, sphere_samples(3, 1, 100, 4))

@pytest.mark.parametrize('c', [1.0, 0.1, 1.0 / 3.0, 2.7, -5.0])
def test_mc_constant(c):
    spec = QuadratureSpec(Method.MONTE_CARLO, mc_samples=100000)
    (mean, err) = mc_sphere_integral(lambda p: np.full(len(p), c), 3, spec)
    assert mean == c
    assert err == 0.0

def test_mc_requires_method():
    with pytest.raises(DomainError):
        mc_sphere_integral(lambda p: np.ones(len(p)), 3, QuadratureSpec(mc_samples=5000))

def test_mc_moment(mc_spec):
    (mean, err) = mc_sphere_integral(lambda p: p[:, 0] ** 2, 3, mc_spec)
    assert err > 0
    assert abs(mean - 1.0 / 3.0) <= 4 * err

def test_mc_deterministic(mc_spec):
    f = lambda p: np.exp(p[:, 1])
    assert mc_sphere_integral(f, 3, mc_spec) == mc_sphere_integral(f, 3, mc_spec)
    other = QuadratureSpec(Method.MONTE_CARLO, mc_samples=mc_spec.mc_samples, seed=12)
    assert mc_sphere_integral(f, 3, other)[0] != mc_sphere_integral(f, 3, mc_spec)[0]

def test_mc_threads(mc_spec):
    f = lambda p: p[:, 0] + p[:, 2] ** 4
    threaded = QuadratureSpec(Method.MONTE_CARLO, mc_samples=mc_spec.mc_samples, seed=mc_spec.seed, threads=4)
    (single, _) = mc_sphere_integral(f, 3, mc_spec)
    (multi, _) = mc_sphere_integral(f, 3, threaded)
    assert multi == pytest.approx(single, abs=1e-12)

def test_mc_shape(mc_spec):
    with pytest.raises(ValueError):
        mc_sphere_integral(lambda p: p, 3, mc_spec)

def test_mc_kernel_power(mc_spec):
    params = KernelParams.from_beta(4, 6.0)
    (q, r) = (1.5, 0.7)
    x = BallPoint.radial(r, 4)
    (mean, err) = mc_sphere_integral(lambda p: kernel_values(params, x, p) ** q, 4, mc_spec)
    expected = kernel_q_norm_oracle(params, q, r, QuadratureSpec())
    assert err > 0
    assert abs(mean - expected) <= 4 * err

def _random_zonal_profile(rng):
    """A polynomial in t plus a weighted kernel power, as a function of t."""
    n = int(rng.integers(3, 6))
    params = KernelParams.from_beta(n, rng.uniform(n, n + 2.0))
    coeffs = rng.normal(size=int(rng.integers(1, 5)))
    (q, r, weight) = (rng.uniform(1.0, 1.5), rng.uniform(0.0, 0.9), rng.uniform(0.0, 1.0))
    def profile(t):
        return np.polynomial.polynomial.polyval(t, coeffs) + weight * kernel_zonal(params, r, t) ** q
    return (n, profile)

def test_oracle_consistency():
    rng = np.random.default_rng(2024)
    for case in range(50):
        (n, profile) = _random_zonal_profile(rng)
        exact = zonal_integral(ZonalIntegrand(profile, n), QuadratureSpec())
        spec = QuadratureSpec(Method.MONTE_CARLO, mc_samples=50000, seed=case)
        (mean, err) = mc_sphere_integral(lambda p, profile=profile: profile(p[:, 0]), n, spec)
        assert abs(mean - exact) <= 4 * err, (case, mean, exact, err)
