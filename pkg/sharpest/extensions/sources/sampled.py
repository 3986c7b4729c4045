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
Sampled boundary data: rows `x1,...,xn,value` of points on the sphere, equally weighted.
"""
import numpy as np

from sharpest.numerics.transform import SampledBoundary

from . import load_rows

FILE_UNIT_TOL = 1e-6

def read_sampled(path: str, n: int, _axis: np.ndarray = None) -> SampledBoundary:
    """
    Reads sampled boundary data. Points within 1e-6 of unit length are
    normalized; the weights are 1/m for m rows.
    """
    data = load_rows(path, n + 1)
    points = data[:, :n]
    norms = np.linalg.norm(points, axis=1)
    if np.any(np.abs(norms - 1.0) > FILE_UNIT_TOL):
        raise ValueError(f'Points in {path} are not on the unit sphere.')
    return SampledBoundary(points / norms[:, np.newaxis], data[:, n])
