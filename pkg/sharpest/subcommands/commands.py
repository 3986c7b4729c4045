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
Lists all available commands.
"""
from sharpest.config import config

#pylint:disable=import-outside-toplevel

SECTIONS = ['general', 'problem', 'oracle', 'output']

# subcommand modules are imported when run so that --help stays fast
def main_constants(options):
    from . import constants
    return constants.main(options)

def main_verify_identity(options):
    from . import verify_identity
    return verify_identity.main(options)

def main_sharpness(options):
    from . import sharpness
    return sharpness.main(options)

def main_monotonicity(options):
    from . import monotonicity
    return monotonicity.main(options)

def main_bound_check(options):
    from . import bound_check
    return bound_check.main(options)

def setup_constants(subparsers):
    sub = subparsers.add_parser('constants', help='Tabulate the sharp constants C_p(x) and C_p.')
    config.setup_arg_parser(sub, SECTIONS)

    sub.set_defaults(function=main_constants)

def setup_verify_identity(subparsers):
    sub = subparsers.add_parser('verify_identity',
                                help='Check the hypergeometric closed form of sphere integrals against an oracle.')
    config.setup_arg_parser(sub, SECTIONS)
    sub.add_argument('--mc', dest='method', action='store_const', const='monte_carlo',
                     help='Use the Monte Carlo oracle (same as --method monte_carlo).')
    sub.add_argument('--lambdas', dest='lambdas', type=str, default=None,
                     help='Comma separated exponents lambda, default 1,n/2,n-1,1.7,3.3.')

    sub.set_defaults(function=main_verify_identity)

def setup_sharpness(subparsers):
    sub = subparsers.add_parser('sharpness', help='Evaluate the estimate on its extremal boundary functions.')
    config.setup_arg_parser(sub, SECTIONS)
    sub.add_argument('--mode', dest='mode', choices=['closed_form', 'quadrature', 'monte_carlo'],
                     default='closed_form', help='How u(x) and the L^p norm are computed.')

    sub.set_defaults(function=main_sharpness)

def setup_monotonicity(subparsers):
    sub = subparsers.add_parser('monotonicity', help='Scan psi(r) and compare with the regime classification.')
    config.setup_arg_parser(sub, SECTIONS)

    sub.set_defaults(function=main_monotonicity)

def setup_bound_check(subparsers):
    sub = subparsers.add_parser('bound_check', help='Check the pointwise estimate for boundary data from a file.')
    config.setup_arg_parser(sub, SECTIONS + ['boundary'])

    sub.set_defaults(function=main_bound_check)

SETUP_COMMANDS = [setup_constants, setup_verify_identity, setup_sharpness, setup_monotonicity,
                  setup_bound_check]
