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
Configuration via YAML files and command line options.

.. include:: README.md

Access the singleton `sharpest.config.config` to get configuration
values, specified either in YAML files or on the command line,
and to load additional YAML files.

For a list of all options and their defaults, see
`sharpest/config/sharpest.yaml`.
"""

from .config import config, SharpestConfigComponent, validate_path, validate_positive, validate_non_negative
