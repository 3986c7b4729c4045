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

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special

from sharpest.numerics import specfun
from sharpest.numerics.errors import (DivergenceError, DomainError, GammaOverflowError, InvalidParameterError,
                                      PoleError)
from sharpest.numerics.specfun import Hyp2F1Params, hyp2f1, hyp2f1_at_one, hyp2f1_euler_transformed, hyp2f1_eval

# (a, b, c) of psi and of its Euler transform for a few n and q beta
def _triples():
    out = []
    for n in (3, 4, 5):
        for qb in (3.3, 5.1, 8.5):
            out.append(((n - qb) / 2.0, n - 1.0 - qb / 2.0, n / 2.0))
            out.append((qb / 2.0, qb / 2.0 - n / 2.0 + 1.0, n / 2.0))
    return out

TRIPLES = _triples()

def test_gamma_known():
    assert specfun.gamma(1.0) == pytest.approx(1.0, rel=1e-14)
    assert specfun.gamma(4.0) == pytest.approx(6.0, rel=1e-14)
    assert specfun.gamma(0.5) == pytest.approx(1.772453850905516, rel=1e-14)

@pytest.mark.parametrize('x', [-29.5, -10.3, -2.5, -0.7, 0.1, 0.5, 1.3, 7.25, 33.3, 99.9, 170.5])
def test_gamma_scipy(x):
    assert specfun.gamma(x) == pytest.approx(special.gamma(x), rel=1e-12)

@pytest.mark.parametrize('x', [0.0, -1.0, -7.0])
def test_gamma_pole(x):
    with pytest.raises(PoleError):
        specfun.gamma(x)
    with pytest.raises(PoleError):
        specfun.log_gamma(x)

def test_gamma_overflow():
    with pytest.raises(GammaOverflowError):
        specfun.gamma(172.0)
    # the log form stays finite
    assert specfun.log_gamma(172.0) == pytest.approx(special.gammaln(172.0), rel=1e-13)

@pytest.mark.parametrize('x', [0.3, 2.5, 50.0, 1000.5, -3.5])
def test_log_gamma(x):
    assert specfun.log_gamma(x) == pytest.approx(special.gammaln(x), rel=1e-12, abs=1e-13)

def test_gamma_sign():
    assert specfun.gamma_sign(3.5) == 1
    assert specfun.gamma_sign(-0.5) == -1
    assert specfun.gamma_sign(-1.5) == 1
    assert specfun.gamma_sign(-2.5) == -1

def test_gamma_ratio():
    assert specfun.gamma_ratio((3.0, 1.0), (2.0, 2.0)) == pytest.approx(2.0, rel=1e-14)
    assert specfun.gamma_ratio((200.5,), (199.5,)) == pytest.approx(199.5, rel=1e-11)
    assert specfun.gamma_ratio((-0.5,), (0.5,)) == pytest.approx(-2.0, rel=1e-13)
    with pytest.raises(PoleError):
        specfun.gamma_ratio((1.0,), (-2.0,))

def test_pochhammer():
    assert specfun.pochhammer(3.7, 0) == 1.0
    assert specfun.pochhammer(1.0, 4) == 24.0
    assert specfun.pochhammer(-2.0, 3) == 0.0
    assert specfun.pochhammer(0.5, 3) == pytest.approx(special.poch(0.5, 3), rel=1e-15)
    with pytest.raises(DomainError):
        specfun.pochhammer(1.0, -1)

@given(st.floats(-20.0, 20.0), st.integers(0, 30))
def test_pochhammer_recurrence(a, k):
    assert specfun.pochhammer(a, k + 1) == specfun.pochhammer(a, k) * (a + k)

@pytest.mark.parametrize('a,b,c', TRIPLES)
def test_hyp2f1_at_zero(a, b, c):
    assert hyp2f1_eval(a, b, c, 0.0) == 1.0

def test_hyp2f1_terminating():
    # F(-n/2, -1; n/2; x) = 1 + x
    assert hyp2f1_eval(-1.5, -1.0, 1.5, 0.49) == pytest.approx(1.49, rel=1e-15)
    assert hyp2f1_euler_transformed(Hyp2F1Params(-1.5, -1.0, 1.5, 0.25)) == pytest.approx(1.25, rel=1e-14)
    assert hyp2f1_eval(-1.5, -1.0, 1.5, 0.25) == pytest.approx(1.25, rel=1e-15)

def test_hyp2f1_terminating_exact_sum():
    (a, b, c, x) = (-3.0, 2.2, 1.5, 0.93)
    terms = [specfun.pochhammer(a, k) * specfun.pochhammer(b, k) / specfun.pochhammer(c, k)
             * x ** k / math.factorial(k) for k in range(4)]
    value = hyp2f1_eval(a, b, c, x)
    assert value == pytest.approx(math.fsum(terms), rel=1e-14)
    assert value == hyp2f1_eval(a, b, c, x)

def test_hyp2f1_partial_sums():
    terms = [specfun.pochhammer(1.0, k) ** 2 / specfun.pochhammer(3.0, k) * 0.5 ** k / math.factorial(k)
             for k in range(150)]
    assert hyp2f1_eval(1.0, 1.0, 3.0, 0.5) == pytest.approx(math.fsum(terms), rel=1e-12)
    assert hyp2f1_eval(1.0, 1.0, 3.0, 0.5) == pytest.approx(special.hyp2f1(1.0, 1.0, 3.0, 0.5), rel=1e-12)

@pytest.mark.parametrize('a,b,c', TRIPLES)
@pytest.mark.parametrize('x', [0.1, 0.5, 0.9, 0.95])
def test_hyp2f1_scipy(a, b, c, x):
    assert hyp2f1_eval(a, b, c, x) == pytest.approx(special.hyp2f1(a, b, c, x), rel=1e-9)

@pytest.mark.parametrize('a,b,c', TRIPLES)
def test_euler_transformation(a, b, c):
    for x in np.linspace(0.0, 0.95, 20):
        params = Hyp2F1Params(a, b, c, float(x))
        direct = specfun._series(a, b, c, float(x)) #pylint:disable=protected-access
        assert hyp2f1_euler_transformed(params) == pytest.approx(direct, rel=1e-10)
        assert hyp2f1(params) == pytest.approx(direct, rel=1e-10)

@given(st.floats(-5.0, 5.0), st.floats(-5.0, 5.0), st.floats(1.5, 6.0), st.floats(0.0, 0.95))
def test_hyp2f1_symmetric(a, b, c, x):
    assert hyp2f1_eval(a, b, c, x) == hyp2f1_eval(b, a, c, x)

MONOTONE = [t for t in TRIPLES + [(0.5, -0.7, 1.5), (-2.5, -1.25, 2.0), (1.0, 1.0, 3.0)]
            if specfun.monotone_direction(*t) is not None]

@pytest.mark.parametrize('a,b,c', MONOTONE)
def test_monotonicity(a, b, c):
    direction = specfun.monotone_direction(a, b, c)
    values = [hyp2f1_eval(a, b, c, x) for x in np.linspace(0.0, 0.95, 40)]
    steps = np.diff(values)
    tol = 1e-12 * max(abs(v) for v in values)
    if direction < 0:
        assert np.all(steps <= tol)
    else:
        assert np.all(steps >= -tol)

def test_monotone_direction():
    assert specfun.monotone_direction(-1.0, 2.0, 3.0) == -1
    assert specfun.monotone_direction(-1.0, -2.0, 3.0) == 1
    assert specfun.monotone_direction(0.0, 2.0, 3.0) == 0
    assert specfun.monotone_direction(4.0, 2.0, 3.0) is None

def test_at_one():
    assert hyp2f1_at_one(1.0, 1.0, 3.0) == pytest.approx(2.0, rel=1e-14)
    assert hyp2f1_eval(1.0, 1.0, 3.0, 0.9999) == pytest.approx(2.0, rel=1e-3)
    assert hyp2f1_at_one(0.0, 0.7, 2.5) == pytest.approx(1.0, rel=1e-14)
    assert hyp2f1_eval(0.3, 0.4, 2.5, 1.0) == pytest.approx(special.hyp2f1(0.3, 0.4, 2.5, 1.0), rel=1e-12)
    with pytest.raises(DivergenceError):
        hyp2f1_at_one(1.0, 2.0, 3.0)

def test_invalid_parameters():
    with pytest.raises(InvalidParameterError):
        Hyp2F1Params(1.0, 1.0, -2.0, 0.5)
    with pytest.raises(DivergenceError):
        Hyp2F1Params(1.0, 2.0, 3.0, 1.0)
    with pytest.raises(DomainError):
        Hyp2F1Params(1.0, 1.0, 3.0, 1.5)
