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
The mathematics: special functions (`specfun`), the general Poisson kernel
(`kernel`), integration oracles on the sphere (`sphere_oracle`), sharp
constants (`sharp`) and the Poisson representation with its sharpness and
bound checks (`transform`).

All functions are pure and safe to call from several threads.
"""
