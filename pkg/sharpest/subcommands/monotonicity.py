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
Scan psi(r) = F((n - q beta)/2, n - 1 - q beta/2; n/2; r) on a grid and compare
its numerical direction with the regime classification.
"""
from typing import List

from sharpest.config import config
from sharpest.numerics.sharp import Regime, global_sharp_constant, psi, psi_parameters
from sharpest.numerics.specfun import monotone_direction

from .report import Report, kernel_description, run

DEFAULT_RADII = tuple(round(0.05 * k, 2) for k in range(20))
FLAT_TOL = 1e-12

EXPECTED = {Regime.CONSTANT_AT_ZERO: ('non-increasing', 'constant'),
            Regime.SUP_AT_BOUNDARY: ('non-decreasing',),
            Regime.DEGENERATE: ('constant',)}

def direction(values: List[float]) -> str:
    """
    'constant', 'non-increasing', 'non-decreasing' or 'none', comparing
    neighbors with a relative tolerance of 1e-12.
    """
    steps = [(b - a, FLAT_TOL * max(1.0, abs(a), abs(b))) for (a, b) in zip(values, values[1:])]
    if all(abs(d) <= tol for (d, tol) in steps):
        return 'constant'
    if all(d <= tol for (d, tol) in steps):
        return 'non-increasing'
    if all(d >= -tol for (d, tol) in steps):
        return 'non-decreasing'
    return 'none'

def main(_):
    def build():
        params = config.problem.kernel_params()
        exps = config.problem.exponents()
        if len(exps) != 1:
            raise ValueError('monotonicity takes a single exponent -p.')
        exps = exps[0]
        radii = sorted(config.problem.r_grid() or DEFAULT_RADII)
        estimate = global_sharp_constant(params, exps)
        report = Report(kernel_description(params, [exps]))
        values = []
        for r in radii:
            value = psi(params, exps, r)
            values.append(value)
            report.add_row(r=r, psi=value)
        detected = direction(values)
        (a, b, c) = psi_parameters(params, exps)
        matches = detected in EXPECTED[estimate.regime]
        report.summary = {'a': a, 'b': b, 'c': c,
                          'monotone_direction': monotone_direction(a, b, c),
                          'detected': detected,
                          'regime': estimate.regime.value,
                          'branch_condition': estimate.branch_condition,
                          'matches': matches}
        return (report, matches)
    return run(build)
