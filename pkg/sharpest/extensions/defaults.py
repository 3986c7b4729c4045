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
Module to install all extensions that come with sharpest by default.
"""

from sharpest.config.extensions import register_boundary_reader, register_family

from . import families
from .sources import sampled
from .sources import zonal

def initialize():
    """
    Register all default extensions.
    """
    register_family('harmonic', families.harmonic)
    register_family('hyperbolic', families.hyperbolic)

    register_boundary_reader('zonal', zonal.read_zonal)
    register_boundary_reader('sampled', sampled.read_sampled)
