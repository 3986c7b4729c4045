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
Zonal boundary data: rows `t,value` with t = <axis, eta> covering [-1, 1].
"""
import numpy as np
from scipy.interpolate import CubicSpline

from sharpest.numerics.transform import ZonalBoundary

from . import load_rows

COVER_TOL = 1e-12

def zonal_profile(t: np.ndarray, values: np.ndarray) -> CubicSpline:
    """
    Not-a-knot cubic spline through the samples, which must cover [-1, 1]
    with distinct t.
    """
    order = np.argsort(t)
    (t, values) = (t[order], values[order])
    if t.size < 2:
        raise ValueError('Zonal boundary data needs at least two rows.')
    if np.any(np.diff(t) <= 0.0):
        raise ValueError('Zonal boundary data has repeated t values.')
    if abs(t[0] + 1.0) > COVER_TOL or abs(t[-1] - 1.0) > COVER_TOL:
        raise ValueError(f'Zonal boundary data must span t in [-1, 1], got [{t[0]}, {t[-1]}].')
    return CubicSpline(t, values, extrapolate=True)

def read_zonal(path: str, n: int, axis: np.ndarray) -> ZonalBoundary:
    """
    Parameters
    ----------
    path: str
        File with rows `t,value`.
    n: int
        Dimension.
    axis: numpy.ndarray
        The axis of the data, length n.
    """
    data = load_rows(path, 2)
    if axis.size != n:
        raise ValueError(f'Axis has {axis.size} components, expected {n}.')
    return ZonalBoundary(zonal_profile(data[:, 0], data[:, 1]), axis)
