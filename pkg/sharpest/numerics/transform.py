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
The representation u_{alpha,beta}[phi](x) = c_{n,beta} * int P_{alpha,beta}(x, eta) phi(eta) dsigma(eta),
L^p norms of boundary data, and numerical checks of the pointwise estimate:
the sharpness of the extremal boundary function and bound margins for
arbitrary data.
"""
import dataclasses
import logging
import math
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BoundViolationError, DomainError
from .kernel import (BallPoint, KernelParams, as_unit_vectors, kernel_power_integral, kernel_values,
                     kernel_zonal, radius_check, sphere_power_integral, unit_axis)
from .sharp import HolderExponents, pointwise_bound_factor, pointwise_sharp_constant
from .sphere_oracle import (Method, QuadratureSpec, ZonalIntegrand, mc_sample_values, mc_sphere_integral,
                            zonal_integral_with_error)

logger = logging.getLogger(__name__)

WEIGHT_SUM_TOL = 1e-10
ALIGN_TOL = 1e-12
QUADRATURE_R_LIMIT = 0.999
DEFAULT_R_GRID = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
SUP_GRID_POINTS = 4097
CLOSED_FORM_TOL = 1e-10
QUADRATURE_TOL = 1e-6
VIOLATION_SIGMAS = 4.0
VIOLATION_FLOOR = 1e-9

class BoundaryKind(Enum):
    ZONAL = 'zonal'
    GENERAL = 'general'
    SAMPLED = 'sampled'

class BoundaryFunction:
    """
    Scalar boundary data phi on S^{n-1}.
    """
    kind: BoundaryKind = None

    def __init__(self, n: int):
        self._n = int(n)

    @property
    def n(self) -> int:
        """Dimension of the ambient space."""
        return self._n

class ZonalBoundary(BoundaryFunction):
    """
    phi(eta) = profile(<axis, eta>). The profile is vectorized over t in [-1, 1].
    """
    kind = BoundaryKind.ZONAL

    def __init__(self, profile: Callable[[np.ndarray], np.ndarray], axis):
        axis = as_unit_vectors(axis)
        super().__init__(axis.size)
        self.profile = profile
        self.axis = axis

    def __call__(self, etas) -> np.ndarray:
        return np.asarray(self.profile(np.asarray(etas) @ self.axis), dtype=float)

class ConstantBoundary(ZonalBoundary):
    """phi == value."""
    def __init__(self, value: float, n: int):
        self.value = float(value)
        super().__init__(lambda t: np.full(np.shape(t), self.value), unit_axis(n))

class ExtremalBoundary(ZonalBoundary):
    """
    phi_0(eta) = P_{alpha,beta}(x, eta)^(q/p), the boundary function attaining
    equality in the pointwise estimate at x.
    """
    def __init__(self, params: KernelParams, exps: HolderExponents, point: BallPoint):
        if exps.infinite:
            raise DomainError('The extremal function needs p < inf.')
        self.params = params
        self.exps = exps
        self.point = point
        direction = point.direction()
        axis = unit_axis(params.n) if direction is None else direction
        (r, power) = (point.norm(), exps.q / exps.p)
        super().__init__(lambda t: kernel_zonal(params, r, t) ** power, axis)

class GeneralBoundary(BoundaryFunction):
    """
    phi given as a function of an (m, n) array of unit vectors returning m values.
    Integrated by Monte Carlo.
    """
    kind = BoundaryKind.GENERAL

    def __init__(self, func: Callable[[np.ndarray], np.ndarray], n: int):
        super().__init__(n)
        self.func = func

    def __call__(self, etas) -> np.ndarray:
        return np.asarray(self.func(etas), dtype=float)

class SampledBoundary(BoundaryFunction):
    """
    phi known at points eta_i with quadrature weights w_i, sum w_i = 1.
    Weights default to 1/m.
    """
    kind = BoundaryKind.SAMPLED

    def __init__(self, points, values, weights=None):
        points = as_unit_vectors(np.atleast_2d(points))
        values = np.asarray(values, dtype=float)
        if values.shape != (points.shape[0],):
            raise DomainError(f'Got {values.size} values for {points.shape[0]} points.')
        if not np.all(np.isfinite(values)):
            raise DomainError('Sampled boundary values must be finite.')
        if weights is None:
            weights = np.full(values.size, 1.0 / values.size)
        weights = np.asarray(weights, dtype=float)
        if weights.shape != values.shape:
            raise DomainError('One weight per sample is required.')
        if abs(math.fsum(weights) - 1.0) > WEIGHT_SUM_TOL:
            raise DomainError(f'Sample weights sum to {math.fsum(weights)!r}, not 1.')
        super().__init__(points.shape[1])
        self.points = points
        self.values = values
        self.weights = weights

def extremal_boundary(params: KernelParams, exps: HolderExponents, x: BallPoint) -> ExtremalBoundary:
    """
    phi_0 = P(x, .)^(q/p) as a zonal function around x/|x|. At the origin this is
    the constant 1.
    """
    return ExtremalBoundary(params, exps, x)

def _weighted(weights: np.ndarray, values: np.ndarray) -> Tuple[float, float]:
    mean = math.fsum(weights * values)
    error = math.sqrt(math.fsum(weights ** 2 * (values - mean) ** 2))
    return (mean, error)

def _is_extremal_at(phi: BoundaryFunction, params: KernelParams, x: BallPoint) -> bool:
    if not isinstance(phi, ExtremalBoundary) or phi.params != params:
        return False
    return np.allclose(phi.point.coordinates, x.coordinates, rtol=0.0, atol=ALIGN_TOL)

def _monte_carlo(spec: QuadratureSpec) -> QuadratureSpec:
    return dataclasses.replace(spec, method=Method.MONTE_CARLO)

def _alignment(phi: ZonalBoundary, x: BallPoint) -> Optional[float]:
    """+1 or -1 if x lies on the axis of phi (any sign at the origin), else None."""
    direction = x.direction()
    if direction is None:
        return 1.0
    s = float(np.dot(direction, phi.axis))
    if abs(s - 1.0) <= ALIGN_TOL:
        return 1.0
    if abs(s + 1.0) <= ALIGN_TOL:
        return -1.0
    return None

def poisson_integral_with_error(params: KernelParams, phi: BoundaryFunction, x: BallPoint,
                                spec: QuadratureSpec, closed_form: bool = True) -> Tuple[float, float]:
    """
    Like `poisson_integral`, also returning the oracle's error estimate
    (quadrature error or Monte Carlo standard error, zero for closed forms).
    """
    if phi.n != params.n or x.n != params.n:
        raise DomainError(f'Dimensions of kernel ({params.n}), boundary data ({phi.n}) '
                          f'and point ({x.n}) differ.')
    c = params.constant()
    r = x.norm()
    if closed_form and isinstance(phi, ConstantBoundary):
        value = phi.value * (1.0 - r * r) ** params.alpha * sphere_power_integral(params.beta / 2.0, params.n, r)
        return (c * value, 0.0)
    if closed_form and _is_extremal_at(phi, params, x):
        return (c * kernel_power_integral(params, phi.exps.q, r), 0.0)

    if isinstance(phi, SampledBoundary):
        (value, error) = _weighted(phi.weights, kernel_values(params, x, phi.points) * phi.values)
        return (c * value, c * error)
    if isinstance(phi, ZonalBoundary) and spec.method == Method.REDUCED_GAUSS_LEGENDRE:
        sign = _alignment(phi, x)
        if sign is not None:
            profile = phi.profile
            g = ZonalIntegrand(lambda t: kernel_zonal(params, r, t) * profile(sign * t), params.n)
            (value, error) = zonal_integral_with_error(g, spec)
            return (c * value, c * error)
        logger.debug('Zonal axis of boundary data is not aligned with x, using Monte Carlo.')
    (value, error) = mc_sphere_integral(lambda etas: kernel_values(params, x, etas) * phi(etas),
                                        params.n, _monte_carlo(spec))
    return (c * value, c * error)

def poisson_integral(params: KernelParams, phi: BoundaryFunction, x: BallPoint,
                     spec: QuadratureSpec, closed_form: bool = True) -> float:
    """
    u_{alpha,beta}[phi](x).

    Constant and extremal data use closed forms unless `closed_form` is False.
    Zonal data with x on its axis is integrated by zonal quadrature when
    `spec.method` is quadrature; zonal data off axis and general data go to
    Monte Carlo. Sampled data uses its weighted sum.
    """
    return poisson_integral_with_error(params, phi, x, spec, closed_form)[0]

def poisson_integral_vector(params: KernelParams, components: Sequence[BoundaryFunction], x: BallPoint,
                            spec: QuadratureSpec, closed_form: bool = True) -> Tuple[np.ndarray, float]:
    """
    u for vector valued data given as scalar components.

    Returns
    -------
    (numpy.ndarray, float):
        The components of u(x) and their Euclidean norm |u(x)|.
    """
    u = np.array([poisson_integral(params, phi, x, spec, closed_form) for phi in components])
    return (u, float(np.linalg.norm(u)))

def _zonal_sup(phi: ZonalBoundary) -> float:
    t = np.linspace(-1.0, 1.0, SUP_GRID_POINTS)
    return float(np.max(np.abs(phi.profile(t))))

def _sup_norm(phi: BoundaryFunction, spec: QuadratureSpec) -> float:
    if isinstance(phi, ConstantBoundary):
        return abs(phi.value)
    if isinstance(phi, ZonalBoundary):
        return _zonal_sup(phi)
    if isinstance(phi, SampledBoundary):
        return float(np.max(np.abs(phi.values)))
    return float(np.max(np.abs(mc_sample_values(phi, phi.n, spec))))

def lp_norm_with_error(phi: BoundaryFunction, p: float, n: int, spec: QuadratureSpec,
                       closed_form: bool = True) -> Tuple[float, float]:
    """
    Like `lp_norm`, also returning a propagated error estimate.
    """
    if phi.n != n:
        raise DomainError(f'Boundary data has dimension {phi.n}, expected {n}.')
    if math.isinf(p):
        return (_sup_norm(phi, spec), 0.0)
    if not p >= 1.0:
        raise DomainError(f'L^p norms need p >= 1, got {p}.')
    if isinstance(phi, ConstantBoundary):
        return (abs(phi.value), 0.0)
    if closed_form and isinstance(phi, ExtremalBoundary) and phi.exps.p == p:
        # |phi_0|^p = P^q
        integral = kernel_power_integral(phi.params, phi.exps.q, phi.point.norm())
        return (integral ** (1.0 / p), 0.0)

    if isinstance(phi, SampledBoundary):
        (integral, error) = _weighted(phi.weights, np.abs(phi.values) ** p)
    elif isinstance(phi, ZonalBoundary) and spec.method == Method.REDUCED_GAUSS_LEGENDRE:
        profile = phi.profile
        (integral, error) = zonal_integral_with_error(
            ZonalIntegrand(lambda t: np.abs(profile(t)) ** p, n), spec)
    else:
        (integral, error) = mc_sphere_integral(lambda etas: np.abs(phi(etas)) ** p, n, _monte_carlo(spec))
    value = integral ** (1.0 / p)
    if integral == 0.0:
        return (value, error ** (1.0 / p))
    return (value, error * value / (p * integral))

def lp_norm(phi: BoundaryFunction, p: float, n: int, spec: QuadratureSpec, closed_form: bool = True) -> float:
    """
    The L^p norm (int |phi|^p dsigma)^(1/p) with respect to normalized surface
    measure; for p = inf the largest |phi| over a t grid (zonal data), the samples
    (sampled data) or the Monte Carlo points (general data).

    The extremal function uses the closed form
    ((1 - r^2)^(alpha q) F(q beta/2, q beta/2 - n/2 + 1; n/2; r^2))^(1/p)
    unless `closed_form` is False.
    """
    return lp_norm_with_error(phi, p, n, spec, closed_form)[0]

def holder_bound_with_error(params: KernelParams, exps: HolderExponents, phi: BoundaryFunction,
                            x: BallPoint, spec: QuadratureSpec) -> Tuple[float, float]:
    factor = pointwise_bound_factor(params, exps, x.norm())
    (norm, error) = lp_norm_with_error(phi, exps.p, params.n, spec)
    return (factor * norm, factor * error)

def holder_bound(params: KernelParams, exps: HolderExponents, phi: BoundaryFunction,
                 x: BallPoint, spec: QuadratureSpec) -> float:
    """C_p(x) (1 - |x|^2)^(-(n-1)/p) ||phi||_p, the right hand side of the pointwise estimate."""
    return holder_bound_with_error(params, exps, phi, x, spec)[0]

class SharpnessMode(Enum):
    CLOSED_FORM = 'closed_form'
    QUADRATURE = 'quadrature'
    MONTE_CARLO = 'monte_carlo'

@dataclasses.dataclass(frozen=True)
class SharpnessReport:#pylint:disable=too-many-instance-attributes
    """
    Result of evaluating the pointwise estimate on its extremal function.

    Attributes
    ----------
    ratio: float
        |u(x)| (1 - r^2)^((n-1)/p) / (C_p(x) ||phi_0||_p), one when the estimate is sharp.
    closed_form_bound: float
        C_p(x).
    integral_value: float
        |u_{alpha,beta}[phi_0](x)|.
    lp_norm: float
        ||phi_0||_p.
    method: SharpnessMode
    r: float
    p: float
    error: float
        Error estimate of the ratio, zero in closed form mode.
    """
    ratio: float
    closed_form_bound: float
    integral_value: float
    lp_norm: float
    method: SharpnessMode
    r: float
    p: float
    error: float = 0.0

    def tolerance(self) -> float:
        """Allowed deviation of the ratio from one."""
        if self.method == SharpnessMode.CLOSED_FORM:
            return CLOSED_FORM_TOL
        if self.method == SharpnessMode.QUADRATURE:
            return QUADRATURE_TOL
        return VIOLATION_SIGMAS * self.error

    def passed(self) -> bool:
        return self.ratio > 0.0 and abs(self.ratio - 1.0) <= self.tolerance()

def sharpness_ratio(params: KernelParams, exps: HolderExponents, r: float, spec: QuadratureSpec,
                    mode: SharpnessMode = SharpnessMode.CLOSED_FORM) -> SharpnessReport:
    """
    Evaluates both sides of the pointwise estimate for the extremal function at
    x = r e_1.

    In closed form mode every factor comes from hypergeometric identities; in
    quadrature and Monte Carlo mode u(x) and ||phi_0||_p are integrated
    numerically while C_p(x) stays closed form.

    Raises
    ------
    DomainError
        For p = inf, or r > 0.999 in the numerical modes.
    """
    if exps.infinite:
        raise DomainError('Sharpness needs p < inf.')
    mode = SharpnessMode(mode)
    radius_check(r)
    if mode != SharpnessMode.CLOSED_FORM and r > QUADRATURE_R_LIMIT:
        raise DomainError(f'r = {r} > {QUADRATURE_R_LIMIT} cannot be resolved by the numerical oracles.')
    if mode == SharpnessMode.QUADRATURE:
        spec = dataclasses.replace(spec, method=Method.REDUCED_GAUSS_LEGENDRE)
    elif mode == SharpnessMode.MONTE_CARLO:
        spec = dataclasses.replace(spec, method=Method.MONTE_CARLO)
    closed_form = mode == SharpnessMode.CLOSED_FORM

    bound = pointwise_sharp_constant(params, exps, r)
    x = BallPoint.radial(r, params.n)
    phi = extremal_boundary(params, exps, x)
    (u, u_error) = poisson_integral_with_error(params, phi, x, spec, closed_form)
    (norm, norm_error) = lp_norm_with_error(phi, exps.p, params.n, spec, closed_form)
    u = abs(u)
    ratio = u * (1.0 - r * r) ** ((params.n - 1) / exps.p) / (bound * norm)
    error = ratio * (u_error / u + norm_error / norm)
    logger.debug('sharpness r=%r p=%r mode=%s ratio=%.17g', r, exps.p, mode.value, ratio)
    return SharpnessReport(ratio, bound, u, norm, mode, float(r), exps.p, error)

@dataclasses.dataclass(frozen=True)
class BoundCheckRow:
    """One grid point of `bound_check`: margin = bound - |u|."""
    r: float
    u_abs: float
    bound: float
    margin: float
    error: float

    def violated(self) -> bool:
        return self.margin < -max(VIOLATION_SIGMAS * self.error, VIOLATION_FLOOR * self.bound)

def bound_check(params: KernelParams, exps: HolderExponents, phi: BoundaryFunction,
                r_grid: Optional[Sequence[float]], spec: QuadratureSpec,
                axis: Optional[np.ndarray] = None) -> List[BoundCheckRow]:
    """
    Checks |u(r axis)| <= C_p(r) (1 - r^2)^(-(n-1)/p) ||phi||_p on a grid of radii.

    The axis defaults to the axis of zonal data and to e_1 otherwise. A row fails
    when |u| exceeds the bound by more than four combined oracle errors.

    Raises
    ------
    BoundViolationError
        If any row fails; the exception carries every row.
    """
    r_grid = DEFAULT_R_GRID if r_grid is None else tuple(float(r) for r in r_grid)
    if axis is None:
        axis = phi.axis if isinstance(phi, ZonalBoundary) else unit_axis(params.n)
    axis = as_unit_vectors(axis)
    for r in r_grid:
        radius_check(r)
        if spec.method == Method.REDUCED_GAUSS_LEGENDRE and r > QUADRATURE_R_LIMIT:
            raise DomainError(f'r = {r} > {QUADRATURE_R_LIMIT} cannot be resolved by quadrature.')
    (norm, norm_error) = lp_norm_with_error(phi, exps.p, params.n, spec)
    rows = []
    for r in r_grid:
        x = BallPoint(r * axis)
        (u, u_error) = poisson_integral_with_error(params, phi, x, spec)
        factor = pointwise_bound_factor(params, exps, r)
        bound = factor * norm
        rows.append(BoundCheckRow(r, abs(u), bound, bound - abs(u), u_error + factor * norm_error))
    failed = [row for row in rows if row.violated()]
    if failed:
        raise BoundViolationError(f'Pointwise bound violated at r = {[row.r for row in failed]}.', rows)
    return rows
