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
Named families of kernel parameters.
"""
from sharpest.numerics.kernel import KernelParams

def harmonic(n: int) -> KernelParams:
    """The classical Poisson kernel of harmonic functions, alpha = 1, beta = n."""
    return KernelParams.harmonic(n)

def hyperbolic(n: int) -> KernelParams:
    """The kernel of hyperbolic harmonic mappings, alpha = n - 1, beta = 2(n - 1)."""
    return KernelParams.hyperbolic(n)
