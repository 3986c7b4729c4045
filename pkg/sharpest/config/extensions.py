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
Manage extensions to sharpest.

To extend sharpest, add the name for your extension to the `extensions` field
in a sharpest config file. It will then be imported when sharpest first looks
up a family or reader. The named python module should then call the appropriate
registration function (`register_family` for a named kernel parameter family,
`register_boundary_reader` for a boundary data file format) and the extension
can be used like the built-in options.
"""

#pylint:disable=global-statement

import importlib
from typing import Callable, List

__extensions_to_load = set()
__families = {}
__boundary_readers = {}

def __initialize():
    """
    This function is called before each use of extensions to import
    the needed modules. This is only done at first use to not delay loading.
    """
    global __extensions_to_load
    while __extensions_to_load:
        ext = __extensions_to_load.pop()
        importlib.import_module(ext)

def register_extension(name : str):
    """
    Register an extension python module.
    For internal use --- users should use the config files.

    Parameters
    ----------
    name: str
        Name of the extension to load.
    """
    global __extensions_to_load
    __extensions_to_load.add(name)

def register_family(name : str, factory : Callable):
    """
    Register a named family of kernel parameters.

    Parameters
    ----------
    name: str
        Name of the family, as used by `--family`.
    factory: Callable[[int], `sharpest.numerics.kernel.KernelParams`]
        Returns the kernel parameters of the family in dimension n.
    """
    global __families
    __families[name] = factory

def register_boundary_reader(name : str, reader : Callable):
    """
    Register a boundary data file format.

    Parameters
    ----------
    name: str
        Name of the format, as used by `--boundary-type`.
    reader: Callable[[str, int, numpy.ndarray], `sharpest.numerics.transform.BoundaryFunction`]
        Reads the file at the given path as boundary data in dimension n.
        The third argument is the axis of zonal data.
    """
    global __boundary_readers
    __boundary_readers[name] = reader

def family(name : str) -> Callable:
    """
    Retrieve a kernel family by name.

    Returns
    -------
    Callable[[int], KernelParams]
        The previously registered factory, or None.
    """
    __initialize()
    return __families.get(name)

def families() -> List[str]:
    """Names of all registered kernel families."""
    __initialize()
    return sorted(__families)

def boundary_reader(name : str) -> Callable:
    """
    Retrieve a boundary data reader by name.

    Returns
    -------
    Callable
        The previously registered reader, or None.
    """
    __initialize()
    return __boundary_readers.get(name)

def boundary_readers() -> List[str]:
    """Names of all registered boundary readers."""
    __initialize()
    return sorted(__boundary_readers)
