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
Evaluate the pointwise estimate on its extremal boundary function over a grid
of exponents and radii; every ratio should be one.
"""
import logging

from sharpest.config import config
from sharpest.numerics.transform import SharpnessMode, sharpness_ratio

from .report import Report, kernel_description, run

logger = logging.getLogger(__name__)

DEFAULT_RADII = (0.0, 0.5, 0.9)

def main(options):
    def build():
        params = config.problem.kernel_params()
        exps_list = config.problem.exponents()
        radii = config.problem.r_grid() or DEFAULT_RADII
        spec = config.oracle.spec()
        mode = SharpnessMode(options.mode)
        report = Report(kernel_description(params, exps_list))
        report.oracle['method'] = mode.value
        failed = 0
        max_deviation = 0.0
        for exps in exps_list:
            for r in radii:
                result = sharpness_ratio(params, exps, r, spec, mode)
                passed = result.passed()
                if not passed:
                    failed += 1
                    logger.error('p=%r r=%r: ratio %r outside 1 +- %g', exps.p, r, result.ratio, result.tolerance())
                max_deviation = max(max_deviation, abs(result.ratio - 1.0))
                report.add_row(p=exps.p, r=r, ratio=result.ratio, c_p_x=result.closed_form_bound,
                               u_abs=result.integral_value, lp_norm=result.lp_norm,
                               error=result.error, passed=passed)
        report.summary = {'mode': mode.value, 'max_deviation': max_deviation,
                          'failed': failed, 'passed': failed == 0}
        return (report, failed == 0)
    return run(build)
