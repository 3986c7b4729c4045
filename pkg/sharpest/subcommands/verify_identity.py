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
Check the closed form of the sphere integral of |x - eta|^(-2 lambda),
F(lambda, lambda - n/2 + 1; n/2; |x|^2), against an integration oracle.
"""
import logging

from sharpest.config import config
from sharpest.config.config import parse_float_list
from sharpest.numerics.kernel import sphere_power_integral
from sharpest.numerics.sphere_oracle import (Method, ZonalIntegrand, mc_sphere_integral,
                                             zonal_integral_with_error)

from .report import Report, run

logger = logging.getLogger(__name__)

DEFAULT_RADII = (0.0, 0.3, 0.7, 0.95)
QUADRATURE_TOL = 1e-8
MC_SIGMAS = 4.0

def default_lambdas(n: int):
    return [1.0, n / 2.0, n - 1.0, 1.7, 3.3]

def _oracle(lam, n, r, spec):
    if spec.method == Method.MONTE_CARLO:
        return mc_sphere_integral(lambda etas: (1.0 + r * r - 2.0 * r * etas[:, 0]) ** (-lam), n, spec)
    return zonal_integral_with_error(ZonalIntegrand(lambda t: (1.0 + r * r - 2.0 * r * t) ** (-lam), n), spec)

def main(options):
    def build():
        n = config.problem.n()
        lambdas = parse_float_list(options.lambdas) if options.lambdas else default_lambdas(n)
        radii = config.problem.r_grid() or DEFAULT_RADII
        spec = config.oracle.spec()
        report = Report({'n': n, 'lambdas': lambdas, 'r': list(radii)})
        max_error = 0.0
        failed = 0
        for lam in lambdas:
            for r in radii:
                closed = sphere_power_integral(lam, n, r)
                (value, oracle_error) = _oracle(lam, n, r, spec)
                error = abs(value - closed)
                if spec.method == Method.MONTE_CARLO:
                    allowed = MC_SIGMAS * oracle_error
                else:
                    allowed = QUADRATURE_TOL * max(1.0, abs(closed))
                passed = error <= allowed
                if not passed:
                    failed += 1
                    logger.error('lambda=%r r=%r: closed form %r, oracle %r, error %g > %g',
                                 lam, r, closed, value, error, allowed)
                max_error = max(max_error, error)
                report.add_row(lam=lam, r=r, closed_form=closed, oracle=value,
                               error=error, oracle_error=oracle_error, passed=passed)
        report.summary = {'max_error': max_error, 'failed': failed, 'passed': failed == 0}
        return (report, failed == 0)
    return run(build)
