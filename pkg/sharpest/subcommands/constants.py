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
Tabulate the sharp constants C_p(x) on a grid of radii, with the global constant C_p.
"""
from sharpest.config import config
from sharpest.numerics.sharp import (boundary_constant, global_sharp_constant, pointwise_bound_factor,
                                     pointwise_sharp_constant)
from sharpest.numerics.transform import DEFAULT_R_GRID

from .report import Report, kernel_description, run

def main(_):
    def build():
        params = config.problem.kernel_params()
        exps = config.problem.exponents()
        if len(exps) != 1:
            raise ValueError('constants takes a single exponent -p.')
        exps = exps[0]
        grid = config.problem.r_grid() or DEFAULT_R_GRID
        report = Report(kernel_description(params, [exps]))
        for r in grid:
            report.add_row(r=r, c_p_x=pointwise_sharp_constant(params, exps, r),
                           bound_factor=pointwise_bound_factor(params, exps, r))
        estimate = global_sharp_constant(params, exps)
        report.summary = {'c_n_beta': params.constant(),
                          'c_p': estimate.value,
                          'c_p_boundary': boundary_constant(params, exps),
                          'regime': estimate.regime.value,
                          'branch_condition': estimate.branch_condition,
                          'in_theorem': estimate.in_theorem}
        return (report, True)
    return run(build)
