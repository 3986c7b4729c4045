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

import math
import warnings

import numpy as np
import pytest
from scipy import special

from sharpest.numerics.errors import DomainError, HypothesisError, OutOfTheoremWarning
from sharpest.numerics.kernel import KernelParams
from sharpest.numerics.sharp import (HolderExponents, Regime, boundary_constant, classify_regime,
                                     dirichlet_gamma_constant, dirichlet_gamma_pointwise_constant,
                                     global_sharp_constant, harmonic_constant, harmonic_h2_bound,
                                     harmonic_pointwise_constant, hyperbolic_constant, hyperbolic_pointwise_constant,
                                     pointwise_bound_factor, pointwise_sharp_constant, psi, psi_parameters,
                                     regime_threshold, theorem_global_formula)
from sharpest.numerics.specfun import hyp2f1_at_one

def test_holder_exponents():
    exps = HolderExponents.from_p(2)
    assert (exps.p, exps.q) == (2.0, 2.0)
    assert HolderExponents.from_p(4).q == pytest.approx(4.0 / 3.0, rel=1e-15)
    inf = HolderExponents.from_p(math.inf)
    assert inf.q == 1.0 and inf.infinite and inf.inverse_p() == 0.0
    assert HolderExponents.from_q(1.0).infinite
    assert HolderExponents.from_q(4.0).p == pytest.approx(4.0 / 3.0, rel=1e-15)
    for p in (1.0, 0.5, -2.0):
        with pytest.raises(DomainError):
            HolderExponents.from_p(p)
    with pytest.raises(DomainError):
        HolderExponents(2.0, 3.0)
    with pytest.raises(DomainError):
        HolderExponents(math.inf, 2.0)
    with pytest.raises(DomainError):
        HolderExponents.from_q(0.5)

@pytest.mark.parametrize('n,beta', [(3, 3.0), (3, 5.0), (4, 4.5), (5, 8.0)])
def test_pointwise_at_origin(n, beta):
    params = KernelParams.from_beta(n, beta)
    for p in (1.25, 2.0, 7.0, math.inf):
        exps = HolderExponents.from_p(p)
        assert pointwise_sharp_constant(params, exps, 0.0) == pytest.approx(params.constant(), rel=1e-14)

@pytest.mark.parametrize('r', [0.0, 0.25, 0.5, 0.9])
def test_harmonic_h2(r):
    params = KernelParams.harmonic(3)
    exps = HolderExponents.from_p(2)
    assert pointwise_sharp_constant(params, exps, r) == pytest.approx(math.sqrt(1 + r * r), rel=1e-12)
    assert harmonic_pointwise_constant(3, exps, r) == pytest.approx(math.sqrt(1 + r * r), rel=1e-12)
    assert pointwise_bound_factor(params, exps, r) == pytest.approx(harmonic_h2_bound(3, r), rel=1e-12)

def test_pointwise_hyperbolic():
    exps = HolderExponents.from_q(2.0)
    params = KernelParams.from_beta(3, 4.0)
    assert pointwise_sharp_constant(params, exps, 0.6) == \
           pytest.approx(hyperbolic_pointwise_constant(3, exps, 0.6), rel=1e-12)

def test_pointwise_radius():
    params = KernelParams.harmonic(3)
    with pytest.raises(DomainError):
        pointwise_sharp_constant(params, HolderExponents.from_p(2), 1.0)
    with pytest.raises(DomainError):
        pointwise_sharp_constant(params, HolderExponents.from_p(2), -0.1)

def test_psi():
    params = KernelParams.harmonic(3)
    exps = HolderExponents.from_q(2.0)
    assert psi_parameters(params, exps) == (-1.5, -1.0, 1.5)
    assert psi(params, exps, 0.49) == pytest.approx(1.49, rel=1e-15)
    assert psi(params, exps, 1.0) == pytest.approx(2.0, rel=1e-14)
    assert regime_threshold(params) == pytest.approx(4.0 / 3.0, rel=1e-15)

@pytest.mark.parametrize('n,beta,q,regime', [(3, 3.0, 1.2, Regime.CONSTANT_AT_ZERO),
                                             (3, 4.0, 1.01, Regime.SUP_AT_BOUNDARY),
                                             (3, 3.0, 4.0 / 3.0, Regime.DEGENERATE),
                                             (3, 3.0, 2.0, Regime.SUP_AT_BOUNDARY),
                                             (5, 6.0, 1.2, Regime.CONSTANT_AT_ZERO),
                                             (5, 10.0, 1.05, Regime.SUP_AT_BOUNDARY)])
def test_classify(n, beta, q, regime):
    assert classify_regime(KernelParams.from_beta(n, beta), HolderExponents.from_q(q)) == regime

def test_global_examples():
    harmonic = KernelParams.harmonic(3)
    est = global_sharp_constant(harmonic, HolderExponents.from_q(1.2))
    assert est.value == pytest.approx(1.0, rel=1e-14)
    assert est.regime == Regime.CONSTANT_AT_ZERO
    assert est.in_theorem
    assert 'q <= 2(n-1)/beta' in est.branch_condition

    exps = HolderExponents.from_q(4.0 / 3.0)
    est = global_sharp_constant(harmonic, exps)
    assert est.regime == Regime.DEGENERATE
    assert est.value == pytest.approx(1.0, rel=1e-14)
    assert boundary_constant(harmonic, exps) == pytest.approx(1.0, rel=1e-12)

    exps = HolderExponents.from_q(2.0)
    params = KernelParams.from_beta(3, 4.0)
    expected = params.constant() * math.sqrt(special.gamma(1.5) * special.gamma(6.0)
                                             / (special.gamma(4.0) * special.gamma(3.5)))
    est = global_sharp_constant(params, exps)
    assert est.regime == Regime.SUP_AT_BOUNDARY
    assert 'beta >= 2(n-1)' in est.branch_condition
    assert est.value == pytest.approx(expected, rel=1e-12)
    assert hyperbolic_constant(3, exps).value == pytest.approx(expected, rel=1e-12)
    assert theorem_global_formula(params, exps) == pytest.approx(expected, rel=1e-12)

def test_harmonic_examples():
    assert harmonic_constant(3, HolderExponents.from_q(1.2)).value == 1.0
    assert harmonic_constant(3, HolderExponents.from_q(2.0)).value == pytest.approx(2.0, rel=1e-12)
    assert hyperbolic_constant(3, HolderExponents.from_p(math.inf)).value == pytest.approx(1.0, rel=1e-12)
    exps = HolderExponents.from_q(2.0)
    assert harmonic_constant(4, exps).value == \
           pytest.approx(global_sharp_constant(KernelParams.harmonic(4), exps).value, rel=1e-12)

@pytest.mark.parametrize('n', [3, 4, 5])
@pytest.mark.parametrize('q', [1.1, 1.5, 2.0, 3.0])
def test_specializations(n, q):
    exps = HolderExponents.from_q(q)
    harmonic = global_sharp_constant(KernelParams.harmonic(n), exps)
    assert harmonic_constant(n, exps).value == pytest.approx(harmonic.value, rel=1e-12)
    assert harmonic_constant(n, exps).regime == harmonic.regime
    hyperbolic = global_sharp_constant(KernelParams.hyperbolic(n), exps)
    assert hyperbolic.regime == Regime.SUP_AT_BOUNDARY
    assert hyperbolic_constant(n, exps).value == pytest.approx(hyperbolic.value, rel=1e-12)
    for gamma in (0.0, 0.25, (n - 2) / 2.0, 1.3):
        params = KernelParams.dirichlet(n, gamma)
        general = global_sharp_constant(params, exps)
        assert dirichlet_gamma_constant(n, gamma, exps).value == pytest.approx(general.value, rel=1e-12)
        assert dirichlet_gamma_pointwise_constant(n, gamma, exps, 0.5) == \
               pytest.approx(pointwise_sharp_constant(params, exps, 0.5), rel=1e-12)
        if general.regime == Regime.SUP_AT_BOUNDARY:
            assert theorem_global_formula(params, exps) == pytest.approx(general.value, rel=1e-12)
    assert dirichlet_gamma_constant(n, 0.0, exps).value == pytest.approx(harmonic_constant(n, exps).value, rel=1e-12)
    assert dirichlet_gamma_constant(n, (n - 2) / 2.0, exps).value == \
           pytest.approx(hyperbolic_constant(n, exps).value, rel=1e-12)

def test_dirichlet_pointwise_example():
    exps = HolderExponents.from_q(2.0)
    assert dirichlet_gamma_pointwise_constant(3, 0.25, exps, 0.5) == \
           pytest.approx(pointwise_sharp_constant(KernelParams.from_beta(3, 3.5), exps, 0.5), rel=1e-12)

@pytest.mark.parametrize('n', [3, 4, 5])
def test_branch_continuity(n):
    for beta in (float(n), n + 0.5, 2.0 * (n - 1) - 0.1):
        params = KernelParams.from_beta(n, beta)
        exps = HolderExponents.from_q(regime_threshold(params))
        assert classify_regime(params, exps) == Regime.DEGENERATE
        assert abs(boundary_constant(params, exps) - params.constant()) <= 1e-10

def _monotonicity_cases(count=30):
    rng = np.random.default_rng(1234)
    cases = []
    while len(cases) < count:
        n = int(rng.integers(3, 7))
        beta = float(rng.uniform(n, 2.0 * (n - 1) + 1.0))
        threshold = 2.0 * (n - 1) / beta
        if len(cases) % 2 == 0:
            if threshold < 1.1:
                continue
            q = float(rng.uniform(1.02, threshold - 0.02))
        else:
            q = float(rng.uniform(max(1.0, threshold) + 0.02, 3.0))
        cases.append((n, beta, q))
    return cases

def test_monotonicity_regime():
    radii = np.arange(20) * 0.05
    seen = set()
    for (n, beta, q) in _monotonicity_cases():
        params = KernelParams.from_beta(n, beta)
        exps = HolderExponents.from_q(q)
        regime = classify_regime(params, exps)
        seen.add(regime)
        values = np.array([psi(params, exps, r * r) for r in radii])
        steps = np.diff(values)
        slack = 1e-12 * np.max(np.abs(values))
        if regime == Regime.CONSTANT_AT_ZERO:
            assert np.all(steps <= slack), (n, beta, q)
        else:
            assert regime == Regime.SUP_AT_BOUNDARY
            assert np.all(steps >= -slack), (n, beta, q)
    assert seen == {Regime.CONSTANT_AT_ZERO, Regime.SUP_AT_BOUNDARY}

def test_boundary_value():
    rng = np.random.default_rng(99)
    for _ in range(10):
        n = int(rng.integers(3, 6))
        params = KernelParams.from_beta(n, float(rng.uniform(n, n + 1.5)))
        exps = HolderExponents.from_q(float(rng.uniform(1.2, 1.8)))
        (a, b, c) = psi_parameters(params, exps)
        near = psi(params, exps, 0.9999 ** 2)
        assert near == pytest.approx(hyp2f1_at_one(a, b, c), rel=1e-3)

@pytest.mark.parametrize('n,beta', [(3, 3.0), (3, 3.6), (4, 5.0), (4, 6.0), (5, 9.5)])
def test_global_dominates_pointwise(n, beta):
    params = KernelParams.from_beta(n, beta)
    for q in (1.05, 1.3, 2.0, 4.0):
        exps = HolderExponents.from_q(q)
        value = global_sharp_constant(params, exps).value
        for r in np.linspace(0.0, 0.99, 34):
            assert pointwise_sharp_constant(params, exps, r) <= value * (1.0 + 1e-12)

def test_not_normalized():
    params = KernelParams(3, 1.0, 4.0)
    exps = HolderExponents.from_p(2)
    with pytest.raises(HypothesisError):
        pointwise_sharp_constant(params, exps, 0.5)
    with pytest.raises(HypothesisError):
        global_sharp_constant(params, exps)
    with pytest.raises(HypothesisError):
        classify_regime(params, exps)

def test_out_of_theorem():
    exps = HolderExponents.from_p(2)
    with pytest.warns(OutOfTheoremWarning):
        est = global_sharp_constant(KernelParams.from_beta(3, 2.5), exps)
    assert not est.in_theorem
    assert est.value > 0
    with pytest.warns(OutOfTheoremWarning):
        est = dirichlet_gamma_constant(3, -0.25, exps)
    assert not est.in_theorem
    with warnings.catch_warnings():
        warnings.simplefilter('error')
        assert global_sharp_constant(KernelParams.harmonic(3), exps).in_theorem
