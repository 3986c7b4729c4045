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

import os
import os.path
import setuptools

if os.path.exists('README.md'):
    with open("README.md", "r") as f:
        long_description = f.read()
else:
    long_description = 'sharpest'

scripts = []
if os.path.exists('bin'):
    for n in os.listdir('bin'):
        name = os.path.join('bin', n)
        if os.path.isfile(name) and os.access(name, os.X_OK):
            scripts.append(name)

setuptools.setup(
    name="sharpest",
    version="1.0.0",
    author="the sharpest developers",
    description="Sharp pointwise estimates for Poisson representations on the unit ball",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests']),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent"
    ],
    install_requires=[
        'numpy>=1.17',
        'scipy',
        'pyyaml',
        'appdirs',
        'setuptools'
    ],
    extras_require={
        'tests': ['pytest', 'pytest-cov', 'hypothesis']
    },
    scripts=scripts,
    include_package_data = True,
    package_data = {'' : ['*.yaml', '*.md']},
    python_requires='>=3.8',
)
