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

#pylint:disable=redefined-outer-name,wrong-import-position
import numpy as np
import pytest

from sharpest.config import config
import sharpest.config.modules
sharpest.config.modules.register_all()

from sharpest.numerics.sphere_oracle import Method, QuadratureSpec

def config_reset():
    """
    Resets the configuration to the packaged defaults, without user files.
    """
    config.reset()

@pytest.fixture
def quad_spec():
    return QuadratureSpec()

@pytest.fixture
def mc_spec():
    return QuadratureSpec(Method.MONTE_CARLO, mc_samples=200000, seed=11)

@pytest.fixture
def zonal_file(tmp_path):
    """phi(t) = 1 + t - 2 t^2 sampled on 401 points of [-1, 1]."""
    path = tmp_path / 'zonal.csv'
    t = np.linspace(-1.0, 1.0, 401)
    with open(path, 'w') as f:
        f.write('# t,value\n')
        for (ti, vi) in zip(t, 1.0 + t - 2.0 * t ** 2):
            f.write(f'{float(ti)!r},{float(vi)!r}\n')
    return str(path)

@pytest.fixture
def sampled_file(tmp_path):
    """2000 seeded points on S^2 with values 1 + eta_1^2."""
    path = tmp_path / 'sampled.csv'
    rng = np.random.default_rng(5)
    g = rng.standard_normal((2000, 3))
    points = g / np.linalg.norm(g, axis=1)[:, np.newaxis]
    with open(path, 'w') as f:
        for p in points:
            f.write(','.join(repr(float(v)) for v in p) + f',{1.0 + float(p[0]) ** 2!r}\n')
    return str(path)
