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
Check the pointwise estimate |u(x)| <= C_p(x) (1 - |x|^2)^(-(n-1)/p) ||phi||_p
for boundary data read from a file.
"""
from sharpest.config import config
from sharpest.numerics.errors import BoundViolationError
from sharpest.numerics.transform import bound_check

from .report import Report, kernel_description, run

def main(_):
    def build():
        params = config.problem.kernel_params()
        exps_list = config.problem.exponents()
        spec = config.oracle.spec()
        phi = config.boundary.boundary(params.n)
        axis = config.boundary.axis(params.n)
        report = Report(dict(kernel_description(params, exps_list),
                             boundary={'type': config.boundary.type(), 'file': config.boundary.file()}))
        violations = 0
        for exps in exps_list:
            try:
                rows = bound_check(params, exps, phi, config.problem.r_grid(), spec, axis)
            except BoundViolationError as e:
                rows = e.rows
            for row in rows:
                violated = row.violated()
                violations += violated
                report.add_row(p=exps.p, r=row.r, u_abs=row.u_abs, bound=row.bound,
                               margin=row.margin, error=row.error, violated=violated)
        report.summary = {'min_margin': min(row['margin'] for row in report.rows),
                          'violations': violations, 'passed': violations == 0}
        return (report, violations == 0)
    return run(build)
