#! /usr/bin/env python
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
"""
Chiral Edge
===========
**Chiral Edge**

chiral-edge computes edge statistics of the chiral non-Hermitian Dirac
random matrix ensemble: the correlation kernel and its large-n forms, traces
and Fredholm approximations of gap probabilities, Monte Carlo samples of the
rightmost eigenvalue, Berry-Esseen rates and large deviation rates.
"""

from .common import read, loads
from .scaling import EnsembleParams, compute_constants
from .settings import RunConfig
