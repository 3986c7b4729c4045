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
Registers all config modules.
"""

import sharpest.numerics.numerics_config
from .config import config, SharpestConfigComponent, validate_path, validate_positive
from .extensions import register_extension

class ExtensionsConfig(SharpestConfigComponent):
    """
    Configuration component for extensions.
    """
    def __init__(self):
        super().__init__()

    # register immediately, don't override
    def _load_dict(self, d : dict, base_dir):
        if not d:
            return
        if isinstance(d, list):
            for ext in d:
                register_extension(ext)
        elif isinstance(d, str):
            register_extension(d)
        else:
            raise ValueError('extensions should be a list or string.')

def _validate_format(fmt, _):
    if fmt not in ('json', 'csv'):
        raise ValueError(f'Unknown output format {fmt}.')
    return fmt

class OutputConfig(SharpestConfigComponent):
    """
    Where and how results are written.
    """
    def __init__(self):
        super().__init__('Output')
        self.register_field('format', str, 'format', _validate_format, 'json or csv.')
        self.register_field('path', str, 'path', validate_path, 'Output file, default stdout.')
        self.register_arg('format', '--format', 'output_format', choices=['json', 'csv'])
        self.register_arg('path', '--output', 'output_path')

_config_initialized = False
def register_all():
    """
    Register all default config modules.
    """
    global _config_initialized #pylint: disable=global-statement
    # needed to call twice when testing subcommands and when not
    if _config_initialized:
        return
    config.register_component(SharpestConfigComponent('General'), 'general')
    config.general.register_component(ExtensionsConfig(), 'extensions')
    config.general.register_field('extensions', list, 'extensions', None,
                                  'Python modules to import as extensions.')
    config.general.register_field('verbose', bool, 'verbose', None,
                                  'Print debugging information.')
    config.general.register_field('strict', bool, 'strict', None,
                                  'Fail with exit code 3 on results outside the stated theorems.')
    config.general.register_field('threads', int, 'threads', validate_positive,
                                  'Worker threads for Monte Carlo sampling.')
    config.general.register_arg('verbose', '--verbose', action='store_const',
                                const=True, type=None)
    config.general.register_arg('strict', '--strict', action='store_const',
                                const=True, type=None)
    config.general.register_arg('threads', '--threads')
    config.register_component(OutputConfig(), 'output')
    sharpest.numerics.numerics_config.register()
    _config_initialized = True
