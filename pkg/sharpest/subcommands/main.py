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
Main sharpest command, calls subcommands.
"""

import argparse
import logging
import sys

from sharpest.config import config
import sharpest.config.modules
from sharpest.subcommands import commands
from sharpest.subcommands.report import EXIT_USAGE

logger = logging.getLogger(__name__)

def setup_logging(verbose: bool):
    """Diagnostics go to stderr; data goes to stdout."""
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', force=True)

def main(args):
    """
    sharpest main function.

    Returns
    -------
    int:
        The exit code of the subcommand.
    """
    sharpest.config.modules.register_all()
    parser = argparse.ArgumentParser(description='Sharp pointwise estimates for Poisson representations '
                                                 'on the unit ball')
    subparsers = parser.add_subparsers()

    for d in commands.SETUP_COMMANDS:
        d(subparsers)

    options = parser.parse_args(args[1:])

    if not hasattr(options, 'function'):
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    setup_logging(False)
    try:
        config.initialize(options)
    except (ValueError, TypeError, AssertionError, FileNotFoundError) as e:
        logger.error('Invalid configuration: %s', e)
        return EXIT_USAGE
    setup_logging(config.general.verbose())
    return options.function(options)
