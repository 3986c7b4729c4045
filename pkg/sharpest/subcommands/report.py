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
Machine readable output of the subcommands, and the common wrapper that
turns results, warnings and errors into output and an exit code.
"""
import csv
import io
import json
import logging
import math
import re
import sys
import warnings
from typing import Callable, List, Tuple

from sharpest.config import config
from sharpest.numerics.errors import OutOfTheoremWarning
from sharpest.numerics.kernel import KernelParams
from sharpest.numerics.sharp import HolderExponents

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_STRICT = 3

# 17 significant digits reproduce every double exactly.
FLOAT_FORMAT = '#.17g'
_FLOAT_MARK = '\x00'
_MARKED_FLOAT = re.compile(r'"\\u0000([^"]*)"')

def _plain(value, mark_floats: bool = False):
    """
    Replaces non-finite floats, which JSON cannot hold, by strings. With
    `mark_floats`, finite floats become marked strings in FLOAT_FORMAT that
    `to_json` unquotes.
    """
    if isinstance(value, float):
        if not math.isfinite(value):
            return repr(value)
        return _FLOAT_MARK + format(value, FLOAT_FORMAT) if mark_floats else value
    if isinstance(value, dict):
        return {k: _plain(v, mark_floats) for (k, v) in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v, mark_floats) for v in value]
    return value

def _csv_value(value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return ''
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT) if math.isfinite(value) else repr(value)
    if isinstance(value, (list, tuple)):
        return ' '.join(_csv_value(v) for v in value)
    return str(value)

def kernel_description(params: KernelParams, exps: List[HolderExponents]) -> dict:
    """The params block of a report."""
    return {'n': params.n, 'alpha': params.alpha, 'beta': params.beta,
            'p': [e.p for e in exps], 'q': [e.q for e in exps],
            'normalized': params.normalized}

class Report:
    """
    Output of one subcommand: parameters, one row per grid point, a summary,
    the oracle settings and any out-of-theorem warnings.
    """
    def __init__(self, params: dict):
        self.params = params
        self.rows = []
        self.summary = {}
        spec = config.oracle
        self.oracle = {'method': spec.method(), 'seed': spec.seed(),
                       'tol': {'abs': spec.abs_tol(), 'rel': spec.rel_tol()}}
        self.warnings = []

    def add_row(self, **row):
        """Appends a row; all rows of a report share the same keys in the same order."""
        if self.rows:
            assert list(row) == list(self.rows[0]), 'Rows must share their columns.'
        self.rows.append(row)

    def _fields(self) -> dict:
        return {'params': self.params, 'rows': self.rows, 'summary': self.summary,
                'oracle': self.oracle, 'warnings': self.warnings}

    def to_dict(self) -> dict:
        return _plain(self._fields())

    def to_json(self) -> str:
        """JSON text with every finite float written in FLOAT_FORMAT."""
        text = json.dumps(_plain(self._fields(), mark_floats=True), indent=2)
        return _MARKED_FLOAT.sub(r'\1', text) + '\n'

    def to_csv(self) -> str:
        out = io.StringIO()
        if self.rows:
            writer = csv.writer(out, lineterminator='\n')
            writer.writerow(list(self.rows[0]))
            for row in self.rows:
                writer.writerow([_csv_value(v) for v in row.values()])
        for (k, v) in self.summary.items():
            out.write(f'# {k}={_csv_value(v)}\n')
        for w in self.warnings:
            out.write(f'# warning={w}\n')
        return out.getvalue()

    def write(self, fmt: str, path: str = None):
        """Writes the report in the given format to path, or stdout."""
        text = self.to_csv() if fmt == 'csv' else self.to_json()
        if path:
            with open(path, 'w') as f:
                f.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()

def run(build: Callable[[], Tuple[Report, bool]]) -> int:
    """
    Runs a subcommand body and writes its report.

    `build` returns the report and whether every verification passed. Out of
    theorem warnings raised while it runs are recorded in the report.

    Returns
    -------
    int:
        0 on success, 1 when a verification failed or an oracle did not converge,
        2 on invalid input, 3 when `general.strict` is set and warnings were raised.
    """
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        try:
            (report, ok) = build()
        except ValueError as e:
            logger.error('%s', e)
            return EXIT_USAGE
        except ArithmeticError as e:
            logger.error('Numerical failure: %s', e)
            return EXIT_VERIFICATION_FAILED
    for w in caught:
        message = str(w.message)
        if issubclass(w.category, OutOfTheoremWarning):
            if message not in report.warnings:
                report.warnings.append(message)
                logger.warning('%s', message)
        else:
            logger.debug('%s: %s', w.category.__name__, message)
    report.write(config.output.format(), config.output.path())
    if not ok:
        return EXIT_VERIFICATION_FAILED
    if report.warnings and config.general.strict():
        return EXIT_STRICT
    return EXIT_OK
