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
"""
Sharp constants of the pointwise estimate

    |u(x)| <= C_p(x) / (1 - |x|^2)^((n-1)/p) * ||phi||_p

for u = u_{alpha,beta}[phi] with n + alpha = beta + 1, and of its uniform
version with C_p = sup C_p(x).

C_p(x) = c_{n,beta} psi(|x|^2)^(1/q) where
psi(r) = F((n - q beta)/2, n - 1 - q beta/2; n/2; r). The sign of the product
of the first two parameters decides whether psi decreases (maximum at r = 0)
or increases (supremum at r = 1, evaluated by Gauss summation).
"""
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .errors import DomainError, HypothesisError, OutOfTheoremWarning
from .kernel import KernelParams, radius_check
from .specfun import hyp2f1_at_one, hyp2f1_eval, log_gamma_ratio

CONJUGATE_TOL = 1e-12
THRESHOLD_TOL = 1e-12

class Regime(Enum):
    """Where the supremum of C_p(x) over the ball is attained."""
    CONSTANT_AT_ZERO = 'constant_at_zero'
    SUP_AT_BOUNDARY = 'sup_at_boundary'
    DEGENERATE = 'degenerate'

@dataclass(frozen=True)
class HolderExponents:
    """
    Conjugate exponents 1/p + 1/q = 1, 1 < p <= inf. p = inf is q = 1.
    """
    p: float
    q: float

    def __post_init__(self):
        (p, q) = (float(self.p), float(self.q))
        if not p > 1.0:
            raise DomainError(f'p must be > 1, got {p}.')
        if not q >= 1.0 or (math.isfinite(p) and q == 1.0):
            raise DomainError(f'q = {q} is not a valid conjugate exponent for p = {p}.')
        lhs = (0.0 if math.isinf(p) else 1.0 / p) + 1.0 / q
        if abs(lhs - 1.0) > CONJUGATE_TOL:
            raise DomainError(f'p = {p} and q = {q} are not conjugate.')
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    @classmethod
    def from_p(cls, p: float) -> 'HolderExponents':
        p = float(p)
        if math.isinf(p):
            return cls(p, 1.0)
        if not p > 1.0:
            raise DomainError(f'p must be > 1, got {p}.')
        return cls(p, p / (p - 1.0))

    @classmethod
    def from_q(cls, q: float) -> 'HolderExponents':
        q = float(q)
        if q == 1.0:
            return cls(math.inf, 1.0)
        if not q > 1.0:
            raise DomainError(f'q must be >= 1, got {q}.')
        return cls(q / (q - 1.0), q)

    @property
    def infinite(self) -> bool:
        """True for p = inf."""
        return math.isinf(self.p)

    def inverse_p(self) -> float:
        """1/p, zero for p = inf."""
        return 0.0 if self.infinite else 1.0 / self.p

@dataclass(frozen=True)
class SharpEstimate:
    """
    A computed global sharp constant.

    Attributes
    ----------
    value: float
        C_p.
    regime: Regime
        Which branch of the case analysis produced the value.
    branch_condition: str
        The inequality on q that selected the branch.
    in_theorem: bool
        False when the parameters lie outside the stated theorems (beta < n);
        the value is then the mechanical extension of the same formulas.
    """
    value: float
    regime: Regime
    branch_condition: str
    in_theorem: bool = True

def _require_normalized(params: KernelParams):
    if not params.normalized:
        raise HypothesisError(f'Sharp constants need n + alpha = beta + 1, got n = {params.n}, '
                              f'alpha = {params.alpha}, beta = {params.beta}.')

def _check_hypotheses(params: KernelParams) -> bool:
    _require_normalized(params)
    if params.beta < params.n:
        warnings.warn(f'beta = {params.beta} < n = {params.n} lies outside the stated theorems; '
                      'the value extends the same formulas.', OutOfTheoremWarning, stacklevel=3)
        return False
    return True

def psi_parameters(params: KernelParams, exps: HolderExponents) -> Tuple[float, float, float]:
    """(a, b, c) = ((n - q beta)/2, n - 1 - q beta/2, n/2)."""
    (n, qb) = (params.n, exps.q * params.beta)
    return ((n - qb) / 2.0, n - 1.0 - qb / 2.0, n / 2.0)

def psi(params: KernelParams, exps: HolderExponents, r: float) -> float:
    """psi(r) = F((n - q beta)/2, n - 1 - q beta/2; n/2; r) for r in [0, 1]."""
    (a, b, c) = psi_parameters(params, exps)
    if r == 1.0:
        return hyp2f1_at_one(a, b, c)
    return hyp2f1_eval(a, b, c, r)

def regime_threshold(params: KernelParams) -> float:
    """2(n - 1)/beta, the value of q where psi is identically one."""
    return 2.0 * (params.n - 1) / params.beta

def pointwise_sharp_constant(params: KernelParams, exps: HolderExponents, r: float) -> float:
    """
    C_p(x) = c_{n,beta} F((n - q beta)/2, n - 1 - q beta/2; n/2; |x|^2)^(1/q), |x| = r.

    Parameters outside beta >= n are computed anyway and reported with an
    `OutOfTheoremWarning`.

    Raises
    ------
    HypothesisError
        If n + alpha != beta + 1.
    """
    _check_hypotheses(params)
    radius_check(r)
    return params.constant() * psi(params, exps, r * r) ** (1.0 / exps.q)

def pointwise_bound_factor(params: KernelParams, exps: HolderExponents, r: float) -> float:
    """C_p(x) / (1 - |x|^2)^((n-1)/p), the full factor in front of ||phi||_p."""
    return (pointwise_sharp_constant(params, exps, r)
            / (1.0 - r * r) ** ((params.n - 1) * exps.inverse_p()))

def classify_regime(params: KernelParams, exps: HolderExponents) -> Regime:
    """
    Decide the monotonicity of psi from the signs of its first two parameters.

    Degenerate when q = 2(n - 1)/beta (psi is identically one), constant at zero
    when the product is <= 0 (psi non-increasing), sup at the boundary when it
    is > 0 (psi non-decreasing). For beta >= n this is the split at
    q = 2(n - 1)/beta; for beta >= 2(n - 1) every q > 1 is sup at the boundary.
    """
    _require_normalized(params)
    if abs(exps.q - regime_threshold(params)) <= THRESHOLD_TOL:
        return Regime.DEGENERATE
    (a, b, _) = psi_parameters(params, exps)
    if abs(exps.q * params.beta - params.n) <= THRESHOLD_TOL:
        a = 0.0
    if a * b <= 0.0:
        return Regime.CONSTANT_AT_ZERO
    return Regime.SUP_AT_BOUNDARY

def _branch_condition(params: KernelParams, exps: HolderExponents, regime: Regime) -> str:
    threshold = regime_threshold(params)
    if regime == Regime.DEGENERATE:
        return f'q == 2(n-1)/beta ({exps.q!r} == {threshold!r})'
    if regime == Regime.CONSTANT_AT_ZERO:
        return f'q <= 2(n-1)/beta ({exps.q!r} <= {threshold!r})'
    if params.beta >= 2.0 * (params.n - 1):
        return f'beta >= 2(n-1) ({params.beta!r} >= {2 * (params.n - 1)}), any q > 1'
    return f'q > 2(n-1)/beta ({exps.q!r} > {threshold!r})'

def boundary_constant(params: KernelParams, exps: HolderExponents) -> float:
    """
    C_p(1) = c_{n,beta} F(a, b; n/2; 1)^(1/q) by Gauss summation. Finite since
    c - a - b = q beta - n + 1 > 0 in scope.
    """
    _require_normalized(params)
    (a, b, c) = psi_parameters(params, exps)
    return params.constant() * hyp2f1_at_one(a, b, c) ** (1.0 / exps.q)

def global_sharp_constant(params: KernelParams, exps: HolderExponents) -> SharpEstimate:
    """
    C_p = sup over the ball of C_p(x).

    c_{n,beta} when psi is non-increasing or constant, otherwise C_p(1).

    Raises
    ------
    HypothesisError
        If n + alpha != beta + 1.
    """
    in_theorem = _check_hypotheses(params)
    regime = classify_regime(params, exps)
    if regime == Regime.SUP_AT_BOUNDARY:
        value = boundary_constant(params, exps)
    else:
        value = params.constant()
    return SharpEstimate(value, regime, _branch_condition(params, exps, regime), in_theorem)

def theorem_global_formula(params: KernelParams, exps: HolderExponents) -> float:
    """
    The boundary branch written as a gamma quotient,
    c_{n,beta} (Gamma(n/2) Gamma(q beta - n + 1) / (Gamma(q beta/2) Gamma((beta q - n + 2)/2)))^(1/q).
    """
    (n, qb) = (params.n, exps.q * params.beta)
    (log_value, sign) = log_gamma_ratio((n / 2.0, qb - n + 1.0), (qb / 2.0, (qb - n + 2.0) / 2.0))
    assert sign > 0
    return params.constant() * math.exp(log_value / exps.q)

def harmonic_constant(n: int, exps: HolderExponents) -> SharpEstimate:
    """
    Global constant for harmonic functions (alpha = 1, beta = n):
    1 if q <= 2(n-1)/n, else
    (2^(nq-n) Gamma(n/2) Gamma((nq-n+1)/2) / (sqrt(pi) Gamma(nq/2)))^(1/q).
    """
    params = KernelParams.harmonic(n)
    regime = classify_regime(params, exps)
    if regime != Regime.SUP_AT_BOUNDARY:
        value = 1.0
    else:
        q = exps.q
        (log_value, sign) = log_gamma_ratio((n / 2.0, (n * q - n + 1.0) / 2.0), (0.5, n * q / 2.0))
        assert sign > 0
        value = math.exp(((n * q - n) * math.log(2.0) + log_value) / q)
    return SharpEstimate(value, regime, _branch_condition(params, exps, regime))

def harmonic_pointwise_constant(n: int, exps: HolderExponents, r: float) -> float:
    """C_p(x) = F((n - nq)/2, -1 + n - nq/2; n/2; |x|^2)^(1/q) for harmonic functions."""
    radius_check(r)
    q = exps.q
    return hyp2f1_eval((n - n * q) / 2.0, -1.0 + n - n * q / 2.0, n / 2.0, r * r) ** (1.0 / q)

def hyperbolic_constant(n: int, exps: HolderExponents) -> SharpEstimate:
    """
    Global constant for hyperbolic harmonic mappings (alpha = n-1, beta = 2(n-1)):
    (Gamma(n/2) Gamma((2q-1)(n-1)) / (Gamma(n/2 + (q-1)(n-1)) Gamma(q(n-1))))^(1/q).
    """
    params = KernelParams.hyperbolic(n)
    regime = classify_regime(params, exps)
    q = exps.q
    (log_value, sign) = log_gamma_ratio((n / 2.0, (2.0 * q - 1.0) * (n - 1)),
                                        (n / 2.0 + (q - 1.0) * (n - 1), q * (n - 1)))
    assert sign > 0
    return SharpEstimate(math.exp(log_value / q), regime, _branch_condition(params, exps, regime))

def hyperbolic_pointwise_constant(n: int, exps: HolderExponents, r: float) -> float:
    """C_p(x) = F(-(n-1)(q-1), n/2 + q - nq; n/2; |x|^2)^(1/q) for hyperbolic harmonic mappings."""
    radius_check(r)
    q = exps.q
    return hyp2f1_eval(-(n - 1) * (q - 1.0), n / 2.0 + q - n * q, n / 2.0, r * r) ** (1.0 / q)

def dirichlet_gamma_constant(n: int, gamma: float, exps: HolderExponents) -> SharpEstimate:
    """
    Global constant for solutions of the Delta_gamma Dirichlet problem
    (alpha = 1 + 2 gamma, beta = n + 2 gamma):
    c_{n,n+2gamma} if q <= 2(n-1)/(n+2gamma) and gamma < n/2 - 1, otherwise
    c_{n,n+2gamma} (Gamma(n/2) Gamma((q-1)n + 2q gamma + 1)
                    / (Gamma((nq + 2 gamma q)/2) Gamma((q-1)n/2 + q gamma + 1)))^(1/q).

    gamma < 0 is outside the stated results and raises an `OutOfTheoremWarning`.
    """
    params = KernelParams.dirichlet(n, gamma)
    in_theorem = _check_hypotheses(params)
    regime = classify_regime(params, exps)
    c = params.constant()
    if regime == Regime.SUP_AT_BOUNDARY:
        q = exps.q
        (log_value, sign) = log_gamma_ratio((n / 2.0, (q - 1.0) * n + 2.0 * q * gamma + 1.0),
                                            ((n * q + 2.0 * gamma * q) / 2.0, (q - 1.0) * n / 2.0 + q * gamma + 1.0))
        assert sign > 0
        value = c * math.exp(log_value / q)
    else:
        value = c
    return SharpEstimate(value, regime, _branch_condition(params, exps, regime), in_theorem)

def dirichlet_gamma_pointwise_constant(n: int, gamma: float, exps: HolderExponents, r: float) -> float:
    """
    C_p(x) = c_{n,n+2gamma} F((1-q)n/2 - q gamma, (2-q)n/2 - q gamma - 1; n/2; |x|^2)^(1/q).
    """
    params = KernelParams.dirichlet(n, gamma)
    _check_hypotheses(params)
    radius_check(r)
    q = exps.q
    f = hyp2f1_eval((1.0 - q) * n / 2.0 - q * gamma, (2.0 - q) * n / 2.0 - q * gamma - 1.0, n / 2.0, r * r)
    return params.constant() * f ** (1.0 / q)

def harmonic_h2_bound(n: int, r: float) -> float:
    """
    sqrt((1 + r^2) / (1 - r^2)^(n-1)), the sharp p = 2 factor for harmonic functions.
    """
    radius_check(r)
    return math.sqrt((1.0 + r * r) / (1.0 - r * r) ** (n - 1))
