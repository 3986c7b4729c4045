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
Configuration options for the problem being studied, the integration oracles
and boundary data.
"""
import math
from typing import List, Optional

import numpy as np

from sharpest.config import config, SharpestConfigComponent, validate_path, validate_positive, validate_non_negative
from sharpest.config.config import parse_float_list
from sharpest.config.extensions import boundary_reader, family

from .kernel import KernelParams, unit_axis
from .sharp import HolderExponents
from .sphere_oracle import Method, QuadratureSpec

def _validate_dimension(n, _):
    if n < 3:
        raise ValueError(f'Dimension must be at least 3, got {n}.')
    return n

def _validate_p(value, base_dir):
    out = parse_float_list(value, base_dir)
    for p in out:
        if not p > 1.0:
            raise ValueError(f'p must be > 1, got {p}.')
    return out

def _validate_r_grid(value, base_dir):
    out = parse_float_list(value, base_dir)
    for r in out:
        if not (0.0 <= r < 1.0):
            raise ValueError(f'Radius {r} is outside [0, 1).')
    return out

def _validate_method(method, _):
    return Method(method).value

def _validate_axis(value, base_dir):
    axis = parse_float_list(value, base_dir)
    if not math.isfinite(float(np.linalg.norm(axis))) or np.linalg.norm(axis) == 0.0:
        raise ValueError('Axis must be a finite nonzero vector.')
    return axis

class ProblemConfig(SharpestConfigComponent):
    """
    The kernel P_{alpha,beta} in dimension n, the exponents p and the radii to sample.

    The kernel is given in exactly one of three ways: a named family, the
    Dirichlet problem parameter gamma, or beta (with alpha = beta + 1 - n unless
    alpha is also given).
    """
    def __init__(self):
        super().__init__('Problem')
        self.register_field('n', int, 'n', _validate_dimension, 'Dimension of the ball.')
        self.register_field('family', str, None, None, 'Named kernel family (harmonic, hyperbolic, ...).')
        self.register_field('alpha', (float, int), None, None, 'Kernel exponent alpha (default beta + 1 - n).')
        self.register_field('beta', (float, int), None, validate_positive, 'Kernel exponent beta.')
        self.register_field('gamma', (float, int), None, None,
                            'Dirichlet problem parameter: alpha = 1 + 2 gamma, beta = n + 2 gamma.')
        self.register_field('p', (list, str, float, int), None, _validate_p,
                            'Exponent p > 1, or comma separated list; inf allowed.')
        self.register_field('r_grid', (list, str, float, int), None, _validate_r_grid,
                            'Comma separated radii in [0, 1).')

        self.register_arg('n', '-n')
        self.register_arg('family', '--family')
        self.register_arg('alpha', '--alpha', type=float)
        self.register_arg('beta', '--beta', type=float)
        self.register_arg('gamma', '--gamma', type=float)
        self.register_arg('p', '-p', type=str)
        self.register_arg('r_grid', '--r', type=str)

    def parameterization(self) -> str:
        """
        Which of the three ways of specifying the kernel is in use.

        Raises
        ------
        ValueError
            Unless exactly one is given, or alpha is given without beta.
        """
        given = [k for k in ('family', 'gamma', 'beta') if self._config_dict.get(k) is not None]
        if len(given) != 1:
            raise ValueError('Specify the kernel with exactly one of --family, --gamma or --beta'
                             f' (got {", ".join(given) if given else "none"}).')
        if self._config_dict.get('alpha') is not None and given[0] != 'beta':
            raise ValueError('--alpha is only valid together with --beta.')
        return given[0]

    def kernel_params(self) -> KernelParams:
        """
        Returns
        -------
        KernelParams:
            The configured kernel.
        """
        n = self.n()
        style = self.parameterization()
        if style == 'family':
            name = self._config_dict['family']
            factory = family(name)
            if factory is None:
                raise ValueError(f'Unknown kernel family {name}.')
            return factory(n)
        if style == 'gamma':
            return KernelParams.dirichlet(n, self._config_dict['gamma'])
        beta = float(self._config_dict['beta'])
        alpha = self._config_dict.get('alpha')
        if alpha is None:
            return KernelParams.from_beta(n, beta)
        return KernelParams(n, float(alpha), beta)

    def gamma(self) -> Optional[float]:
        """The Dirichlet problem parameter, if the kernel was given that way."""
        return self._config_dict.get('gamma')

    def family_name(self) -> Optional[str]:
        return self._config_dict.get('family')

    def exponents(self) -> List[HolderExponents]:
        """
        Returns
        -------
        List[HolderExponents]:
            One conjugate pair per configured p.
        """
        return [HolderExponents.from_p(p) for p in self._config_dict['p']]

    def r_grid(self) -> Optional[List[float]]:
        """The configured radii, or None for the command's default grid."""
        return self._config_dict.get('r_grid')

class OracleConfig(SharpestConfigComponent):
    """
    Settings of the numerical integration oracles.
    """
    def __init__(self):
        super().__init__('Oracle')
        self.register_field('method', str, 'method', _validate_method, 'quadrature or monte_carlo.')
        self.register_field('abs_tol', float, 'abs_tol', validate_positive, 'Absolute quadrature tolerance.')
        self.register_field('rel_tol', float, 'rel_tol', validate_positive, 'Relative quadrature tolerance.')
        self.register_field('max_subdivisions', int, None, validate_positive,
                            'Maximum number of panel bisections.')
        self.register_field('panel_order', int, None, validate_positive, 'Gauss-Legendre points per panel.')
        self.register_field('mc_samples', int, None, validate_positive, 'Number of Monte Carlo samples.')
        self.register_field('seed', int, 'seed', validate_non_negative, 'Monte Carlo seed.')

        self.register_arg('method', '--method', choices=[m.value for m in Method])
        self.register_arg('abs_tol', '--abs-tol')
        self.register_arg('rel_tol', '--rel-tol')
        self.register_arg('mc_samples', '--samples')
        self.register_arg('seed', '--seed')

    def spec(self) -> QuadratureSpec:
        """
        Returns
        -------
        QuadratureSpec:
            The oracle settings, with the thread count from the general section.
        """
        d = self._config_dict
        return QuadratureSpec(Method(d['method']), d['abs_tol'], d['rel_tol'], d['max_subdivisions'],
                              d['mc_samples'], d['seed'], d['panel_order'], config.general.threads())

class BoundaryConfig(SharpestConfigComponent):
    """
    Boundary data read from a file.
    """
    def __init__(self):
        super().__init__('Boundary Data')
        self.register_field('type', str, 'type', None, 'Format of the boundary data file (zonal or sampled).')
        self.register_field('file', str, 'file', validate_path, 'Boundary data file.')
        self.register_field('axis', (list, str), None, _validate_axis,
                            'Axis of zonal data, default e_1.')

        self.register_arg('type', '--boundary-type', 'boundary_type')
        self.register_arg('file', '--boundary', 'boundary_file')

    def axis(self, n: int) -> np.ndarray:
        axis = self._config_dict.get('axis')
        if axis is None:
            return unit_axis(n)
        if len(axis) != n:
            raise ValueError(f'Axis has {len(axis)} components, expected {n}.')
        axis = np.asarray(axis, dtype=float)
        return axis / np.linalg.norm(axis)

    def boundary(self, n: int):
        """
        Returns
        -------
        `sharpest.numerics.transform.BoundaryFunction`:
            The boundary data in the configured file.
        """
        path = self.file()
        if path is None:
            raise ValueError('No boundary data file given (--boundary).')
        reader = boundary_reader(self.type())
        if reader is None:
            raise ValueError(f'Unknown boundary data type {self.type()}.')
        return reader(path, n, self.axis(n))

def register():
    """
    Registers the problem, oracle and boundary config options with the global config manager.
    """
    config.register_component(ProblemConfig(), 'problem')
    config.register_component(OracleConfig(), 'oracle')
    config.register_component(BoundaryConfig(), 'boundary')
