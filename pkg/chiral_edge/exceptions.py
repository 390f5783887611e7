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


class ChiralEdgeError(Exception):
    pass


class DomainError(ChiralEdgeError, ValueError):
    pass


class SingularityError(ChiralEdgeError, ArithmeticError):
    pass


class ConfigurationError(ChiralEdgeError, ValueError):
    pass


class BudgetExceededError(ChiralEdgeError, RuntimeError):
    """ Raised when a quadrature runs out of evaluations.

    The best estimate reached so far is kept in `partial`.
    """

    def __init__(self, message, partial=None):
        super(BudgetExceededError, self).__init__(message)
        self.partial = partial


class SamplingError(ChiralEdgeError, RuntimeError):

    def __init__(self, message, replicate=None):
        if replicate is not None:
            message = 'replicate {}: {}'.format(replicate, message)
        super(SamplingError, self).__init__(message)
        self.replicate = replicate


class OutputFileError(ChiralEdgeError, IOError):
    pass


class ParseError(ChiralEdgeError, ValueError):
    pass
