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
Numerical integration over the unit sphere S^{n-1} with respect to the
normalized surface measure.

Two unlike methods are provided so that each closed form can be checked
against an independent number:

 * `zonal_integral` reduces an integrand depending only on t = <axis, eta>
   to a one dimensional integral and applies adaptive Gauss-Legendre panels.
 * `mc_sphere_integral` averages an arbitrary integrand over uniform samples
   drawn from a counter-based (Philox) generator.
"""
import heapq
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import DomainError, NonFiniteIntegrandError, ToleranceNotMetError
from .kernel import KernelParams, kernel_zonal, radius_check
from .specfun import gamma_ratio

logger = logging.getLogger(__name__)

MC_BLOCK_SIZE = 4096
MIN_MC_SAMPLES = 1000

class Method(Enum):
    """Oracle integration method."""
    REDUCED_GAUSS_LEGENDRE = 'quadrature'
    MONTE_CARLO = 'monte_carlo'

@dataclass(frozen=True)
class QuadratureSpec:#pylint:disable=too-many-instance-attributes
    """
    Oracle configuration.

    Attributes
    ----------
    method: Method
        Which oracle to use where a choice exists.
    abs_tol, rel_tol: float
        Adaptive quadrature stops once the error estimate is below
        max(abs_tol, rel_tol * |value|).
    max_subdivisions: int
        Number of panel bisections allowed before giving up.
    mc_samples: int
        Number of Monte Carlo samples.
    seed: int
        64 bit seed (Philox key) of the Monte Carlo stream.
    panel_order: int
        Gauss-Legendre points per panel.
    threads: int
        Worker threads used to generate Monte Carlo blocks.
    """
    method: Method = Method.REDUCED_GAUSS_LEGENDRE
    abs_tol: float = 1e-12
    rel_tol: float = 1e-11
    max_subdivisions: int = 2000
    mc_samples: int = 100000
    seed: int = 0
    panel_order: int = 20
    threads: int = 1

    def __post_init__(self):
        if not isinstance(self.method, Method):
            object.__setattr__(self, 'method', Method(self.method))
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError('Quadrature tolerances must be positive.')
        if self.mc_samples < MIN_MC_SAMPLES:
            raise DomainError(f'At least {MIN_MC_SAMPLES} Monte Carlo samples are required.')
        if self.max_subdivisions < 1:
            raise DomainError('max_subdivisions must be at least 1.')
        if self.panel_order < 2:
            raise DomainError('panel_order must be at least 2.')
        if self.threads < 1:
            raise DomainError('threads must be at least 1.')
        if not 0 <= self.seed < 2**64:
            raise DomainError(f'Seed {self.seed} is not a 64 bit unsigned integer.')

    def tolerance(self, value: float) -> float:
        """Error target for an integral of the given size."""
        return max(self.abs_tol, self.rel_tol * abs(value))

@dataclass(frozen=True)
class ZonalIntegrand:
    """
    A function on S^{n-1} given through t = <axis, eta>.

    f must accept a numpy array of t values in (-1, 1) and return an array of
    the same shape.
    """
    f: Callable[[np.ndarray], np.ndarray]
    n: int

def zonal_measure_constant(n: int) -> float:
    """
    Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)), the density of t = <axis, eta>
    relative to (1 - t^2)^((n-3)/2) dt. Also valid for n = 2 (the circle).
    """
    return gamma_ratio((n / 2.0,), (0.5, (n - 1) / 2.0))

class _Panels:
    """Fixed-order Gauss-Legendre rule applied on [a, b] in the angle theta."""
    def __init__(self, g: ZonalIntegrand, order: int):
        (self._nodes, self._weights) = leggauss(order)
        self._f = g.f
        self._power = g.n - 2

    def integrate(self, a: float, b: float) -> float:
        half = 0.5 * (b - a)
        theta = 0.5 * (a + b) + half * self._nodes
        values = np.asarray(self._f(np.cos(theta)), dtype=float) * np.sin(theta) ** self._power
        if not np.all(np.isfinite(values)):
            raise NonFiniteIntegrandError(f'Integrand is not finite on [{a}, {b}].')
        return half * float(np.dot(self._weights, values))

    def refine(self, a: float, b: float):
        """Returns a heap entry for [a, b]: (-error, a, b, value)."""
        m = 0.5 * (a + b)
        coarse = self.integrate(a, b)
        fine = self.integrate(a, m) + self.integrate(m, b)
        return (-abs(fine - coarse), a, b, fine)

def zonal_integral_with_error(g: ZonalIntegrand, spec: QuadratureSpec) -> Tuple[float, float]:
    """
    Like `zonal_integral`, also returning the error estimate.
    """
    # t = cos(theta) turns the weight (1 - t^2)^((n-3)/2) dt into sin(theta)^(n-2) dtheta,
    # smooth at both ends for every n
    panels = _Panels(g, spec.panel_order)
    scale = zonal_measure_constant(g.n)
    heap = [panels.refine(0.0, math.pi)]
    subdivisions = 0
    while True:
        value = scale * math.fsum(entry[3] for entry in heap)
        error = scale * math.fsum(-entry[0] for entry in heap)
        if error <= spec.tolerance(value):
            logger.debug('zonal integral %.17g +- %.3g after %d subdivisions', value, error, subdivisions)
            return (value, error)
        if subdivisions >= spec.max_subdivisions:
            raise ToleranceNotMetError(f'Zonal quadrature reached {subdivisions} subdivisions with error '
                                       f'{error:g} > {spec.tolerance(value):g}.', value, error)
        (_, a, b, _) = heapq.heappop(heap)
        m = 0.5 * (a + b)
        heapq.heappush(heap, panels.refine(a, m))
        heapq.heappush(heap, panels.refine(m, b))
        subdivisions += 1

def zonal_integral(g: ZonalIntegrand, spec: QuadratureSpec) -> float:
    """
    Integral of f(<axis, eta>) over S^{n-1} against normalized surface measure,

        Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)) * int_{-1}^{1} f(t) (1 - t^2)^((n-3)/2) dt,

    computed by adaptive bisection with Gauss-Legendre panels of order
    `spec.panel_order`.

    Raises
    ------
    ToleranceNotMetError
        If `spec.max_subdivisions` bisections do not reach the tolerance.
    NonFiniteIntegrandError
        If f returns inf or nan at a quadrature node.
    """
    return zonal_integral_with_error(g, spec)[0]

def kernel_power_integrand(params: KernelParams, q: float, r: float) -> ZonalIntegrand:
    """The zonal integrand P(x, eta)^q for |x| = r, x along the axis."""
    return ZonalIntegrand(lambda t: kernel_zonal(params, r, t) ** q, params.n)

def kernel_q_norm_oracle(params: KernelParams, q: float, r: float, spec: QuadratureSpec) -> float:
    """
    Integral of P_{alpha,beta}(x, eta)^q over the sphere for |x| = r, by
    zonal quadrature. Integrands with r > 0.999 peak too sharply and are
    expected to exhaust the subdivisions.
    """
    radius_check(r)
    if not math.isfinite(q * params.beta):
        raise DomainError('q * beta must be finite.')
    return zonal_integral(kernel_power_integrand(params, q, r), spec)

def sphere_samples(seed: int, block: int, count: int, n: int) -> np.ndarray:
    """
    Uniform points on S^{n-1} for one block of the sample stream.

    Block b uses the Philox stream keyed by seed, jumped b times, so every
    sample depends only on (seed, sample index).
    """
    bit_generator = np.random.Philox(key=seed).jumped(block)
    g = np.random.Generator(bit_generator).standard_normal((count, n))
    return g / np.linalg.norm(g, axis=1)[:, np.newaxis]

def mc_sample_values(f: Callable[[np.ndarray], np.ndarray], n: int, spec: QuadratureSpec) -> np.ndarray:
    """
    f evaluated on the sample stream of `spec`, ordered by sample index.

    f receives an (m, n) array of unit vectors and must return m values.
    """
    total = spec.mc_samples
    blocks = (total + MC_BLOCK_SIZE - 1) // MC_BLOCK_SIZE

    def evaluate(block):
        count = min(MC_BLOCK_SIZE, total - block * MC_BLOCK_SIZE)
        points = sphere_samples(spec.seed, block, count, n)
        values = np.asarray(f(points), dtype=float)
        if values.shape != (count,):
            raise ValueError(f'Integrand returned shape {values.shape}, expected ({count},).')
        return values

    if spec.threads > 1:
        with ThreadPoolExecutor(max_workers=spec.threads) as pool:
            parts = list(pool.map(evaluate, range(blocks)))
    else:
        parts = [evaluate(b) for b in range(blocks)]
    values = np.concatenate(parts)
    if not np.all(np.isfinite(values)):
        raise NonFiniteIntegrandError('Monte Carlo integrand is not finite at some sample.')
    return values

def mc_sphere_integral(f: Callable[[np.ndarray], np.ndarray], n: int,
                       spec: QuadratureSpec) -> Tuple[float, float]:
    """
    Monte Carlo integral of f over S^{n-1} against normalized surface measure.

    Samples are normalized Gaussian vectors from a Philox stream seeded by
    `spec.seed`. Blocks may be generated on several threads; the result does
    not depend on the thread count since the values are reduced in sample order
    with numpy's pairwise summation. `spec.method` must be Monte Carlo.

    Returns
    -------
    (float, float):
        Sample mean and its standard error. An integrand that is constant on
        the samples returns that constant with standard error 0.
    """
    if spec.method != Method.MONTE_CARLO:
        raise DomainError(f'Monte Carlo integration requested with method {spec.method.value}.')
    values = mc_sample_values(f, n, spec)
    if np.all(values == values[0]):
        return (float(values[0]), 0.0)
    mean = float(np.mean(values))
    std_error = float(np.std(values, ddof=1)) / math.sqrt(values.size)
    return (mean, std_error)
