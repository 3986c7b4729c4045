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
The general Poisson kernel P_{alpha,beta}(x, eta) = (1 - |x|^2)^alpha / |x - eta|^beta
on the unit ball, and its normalization constant.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, PoleError
from .specfun import gamma_ratio, hyp2f1_eval, is_nonpositive_integer

NORMALIZED_TOL = 1e-12
UNIT_TOL = 1e-12
RENORMALIZE_TOL = 1e-8

@dataclass(frozen=True)
class KernelParams:
    """
    Dimension and exponents of a general Poisson kernel.

    Attributes
    ----------
    n: int
        Dimension of the ball, at least 3.
    alpha: float
        Exponent of (1 - |x|^2).
    beta: float
        Exponent of |x - eta|, positive.
    """
    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 3:
            raise DomainError(f'Dimension must be an integer >= 3, got {self.n}.')
        if not self.beta > 0:
            raise DomainError(f'beta must be positive, got {self.beta}.')
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'beta', float(self.beta))

    @property
    def normalized(self) -> bool:
        """True if n + alpha = beta + 1, the family the sharp estimates cover."""
        return abs(self.n + self.alpha - self.beta - 1.0) <= NORMALIZED_TOL * max(1.0, abs(self.beta))

    @classmethod
    def from_beta(cls, n: int, beta: float) -> 'KernelParams':
        """Normalized kernel with alpha = beta + 1 - n."""
        return cls(n, beta + 1.0 - n, beta)

    @classmethod
    def harmonic(cls, n: int) -> 'KernelParams':
        """The classical Poisson kernel, alpha = 1, beta = n."""
        return cls(n, 1.0, float(n))

    @classmethod
    def hyperbolic(cls, n: int) -> 'KernelParams':
        """The hyperbolic Poisson kernel, alpha = n - 1, beta = 2(n - 1)."""
        return cls(n, n - 1.0, 2.0 * (n - 1))

    @classmethod
    def dirichlet(cls, n: int, gamma: float) -> 'KernelParams':
        """Kernel representing solutions of the Delta_gamma Dirichlet problem."""
        if not gamma > -0.5:
            raise DomainError(f'The Delta_gamma Dirichlet problem needs gamma > -1/2, got {gamma}.')
        return cls(n, 1.0 + 2.0 * gamma, n + 2.0 * gamma)

    def constant(self) -> float:
        """c_{n,beta} for these parameters."""
        return normalization_constant(self.n, self.beta)

class BallPoint:
    """
    A point of the open unit ball, stored as a full coordinate vector.
    """
    def __init__(self, coordinates):
        """
        Parameters
        ----------
        coordinates: array_like
            Coordinates of the point, Euclidean norm < 1.
        """
        self._coords = np.array(coordinates, dtype=float)
        if self._coords.ndim != 1 or self._coords.size < 3:
            raise DomainError('A ball point needs a coordinate vector of length >= 3.')
        self._norm = float(np.linalg.norm(self._coords))
        if not self._norm < 1.0:
            raise DomainError(f'Point of norm {self._norm} is not inside the unit ball.')

    @classmethod
    def radial(cls, r: float, n: int, axis: int = 0) -> 'BallPoint':
        """The point r * e_axis."""
        coords = np.zeros(n)
        coords[axis] = r
        return cls(coords)

    @property
    def n(self) -> int:
        return self._coords.size

    @property
    def coordinates(self) -> np.ndarray:
        return self._coords.copy()

    def norm(self) -> float:
        return self._norm

    def direction(self) -> Optional[np.ndarray]:
        """Unit vector x / |x|, or None at the origin."""
        if self._norm == 0.0:
            return None
        return self._coords / self._norm

    def __repr__(self):
        return f'BallPoint({self._coords.tolist()})'

def as_unit_vectors(eta) -> np.ndarray:
    """
    Checks that the rows of eta lie on the unit sphere.

    Rows within 1e-8 of unit length are renormalized; further away is an error.
    """
    eta = np.array(eta, dtype=float)
    norms = np.linalg.norm(eta, axis=-1)
    off = np.abs(norms - 1.0)
    if np.any(off > RENORMALIZE_TOL):
        raise DomainError(f'Boundary point is not a unit vector (|eta| - 1 = {float(np.max(off)):g}).')
    if np.any(off > UNIT_TOL):
        eta = eta / norms[..., np.newaxis]
    return eta

def normalization_constant(n: int, beta: float) -> float:
    """
    c_{n,beta} = Gamma(beta/2) Gamma(beta/2 - n/2 + 1) / (Gamma(n/2) Gamma(beta - n + 1)).

    Raises
    ------
    DomainError
        If n < 3 or beta <= n - 2.
    PoleError
        If beta - n + 1 is a nonpositive integer.
    """
    if n < 3:
        raise DomainError(f'Dimension must be >= 3, got {n}.')
    if not beta > n - 2:
        raise DomainError(f'c_(n,beta) needs beta > n - 2, got beta = {beta}, n = {n}.')
    if is_nonpositive_integer(beta - n + 1):
        raise PoleError(f'Gamma(beta - n + 1) has a pole for beta = {beta}, n = {n}.')
    return gamma_ratio((beta / 2.0, beta / 2.0 - n / 2.0 + 1.0), (n / 2.0, beta - n + 1.0))

def poisson_kernel(params: KernelParams, x: BallPoint, eta) -> float:
    """
    P_{alpha,beta}(x, eta) for a single boundary point eta.
    """
    if x.n != params.n:
        raise DomainError(f'Point has dimension {x.n}, kernel has {params.n}.')
    return float(kernel_values(params, x, np.asarray(eta, dtype=float)[np.newaxis, :])[0])

def kernel_values(params: KernelParams, x: BallPoint, etas) -> np.ndarray:
    """
    P_{alpha,beta}(x, eta) for every row of etas, shape (m, n).
    """
    etas = as_unit_vectors(etas)
    if etas.shape[-1] != params.n:
        raise DomainError(f'Boundary points have dimension {etas.shape[-1]}, kernel has {params.n}.')
    dist = np.linalg.norm(etas - x.coordinates, axis=-1)
    return (1.0 - x.norm() ** 2) ** params.alpha / dist ** params.beta

def kernel_zonal(params: KernelParams, r: float, t) -> np.ndarray:
    """
    The kernel as a function of t = <x/|x|, eta> for |x| = r:
    (1 - r^2)^alpha * (1 + r^2 - 2 r t)^(-beta/2).
    """
    t = np.asarray(t, dtype=float)
    return (1.0 - r * r) ** params.alpha * (1.0 + r * r - 2.0 * r * t) ** (-params.beta / 2.0)

def sphere_power_integral(lam: float, n: int, r: float) -> float:
    """
    Closed form of the integral of |x - eta|^(-2 lam) over the sphere with respect
    to normalized surface measure, |x| = r < 1:
    F(lam, lam - n/2 + 1; n/2; r^2).
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f'Radius {r} is outside [0, 1).')
    return hyp2f1_eval(lam, lam - n / 2.0 + 1.0, n / 2.0, r * r)

def kernel_power_integral(params: KernelParams, q: float, r: float) -> float:
    """
    Closed form of the integral of P_{alpha,beta}(x, .)^q over the sphere, |x| = r:
    (1 - r^2)^(alpha q) * F(q beta/2, q beta/2 - n/2 + 1; n/2; r^2).
    """
    return (1.0 - r * r) ** (params.alpha * q) * sphere_power_integral(q * params.beta / 2.0, params.n, r)

def unit_axis(n: int, axis: int = 0) -> np.ndarray:
    """The canonical basis vector e_axis of R^n."""
    e = np.zeros(n)
    e[axis] = 1.0
    return e

def radius_check(r: float, limit: float = 1.0):
    """Raises DomainError unless 0 <= r < limit."""
    if not (0.0 <= r < limit and math.isfinite(r)):
        raise DomainError(f'Radius {r} is outside [0, {limit}).')
