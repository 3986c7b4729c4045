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
Boundary data file formats.

These are specified in the "type" field of the boundary section of the configuration
yaml file, or with `--boundary-type`. Both are plain comma separated text with `#` comments.
"""
import os

import numpy as np

def load_rows(path: str, columns: int) -> np.ndarray:
    """
    Reads a comma separated file into an array with the given number of columns.

    Raises
    ------
    ValueError
        If the file does not exist, is empty or has the wrong number of columns.
    """
    if not os.path.exists(path):
        raise ValueError(f'Boundary data file {path} does not exist.')
    data = np.loadtxt(path, delimiter=',', comments='#', ndmin=2)
    if data.size == 0:
        raise ValueError(f'Boundary data file {path} is empty.')
    if data.shape[1] != columns:
        raise ValueError(f'Boundary data file {path} has {data.shape[1]} columns, expected {columns}.')
    if not np.all(np.isfinite(data)):
        raise ValueError(f'Boundary data file {path} contains values that are not finite.')
    return data
