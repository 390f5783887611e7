#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright 2026 The chiral-edge developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import os

HERE = os.path.abspath(os.path.dirname(__file__))


def read(fname):
    with open(os.path.join(HERE, fname)) as f:
        return f.read()


def requirements(fname):
    """ Requirement specifiers from a pip requirements file. """
    lines = (line.split("#")[0].strip() for line in read(fname).splitlines())
    return [line for line in lines if line and not line.startswith("-")]


METADATA = {
    'name': 'chiral-edge',
    'version': '0.1',
    'author': 'The chiral-edge developers',
    'description': "Edge statistics of the chiral non-Hermitian Dirac "
                   "random matrix ensemble.",
    'license': "Apache",
    'keywords': "random matrices determinantal point process gumbel "
                "berry-esseen large deviations",
    'packages': ['chiral_edge', 'chiral_edge.tests'],
    'long_description': read('README.md'),
    'long_description_content_type': 'text/markdown',
    'classifiers': [
        "Development Status :: 3 - Alpha",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: Apache Software License",
    ],
}

SETUPTOOLS_METADATA = {
    'install_requires': requirements('requirements.txt'),
    'extras_require': {
        'test': requirements('requirements-dev.txt'),
        'docs': requirements('requirements-docs.txt'),
    },
    'python_requires': '>=3.6',
    'entry_points': {
        'console_scripts': [
            'chiral-edge = chiral_edge.cli:main',
        ],
    },
}


def install():
    """ Install with setuptools; numpy and scipy are pulled in as requirements.
    """
    from setuptools import setup
    options = dict(METADATA, **SETUPTOOLS_METADATA)
    setup(**options)


if __name__ == '__main__':
    install()
