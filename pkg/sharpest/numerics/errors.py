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
Exceptions and warnings raised by the numerical modules.

Everything derives from `SharpestError` so callers can catch the whole family,
while the second base class keeps the usual Python meaning (a pole is a
`ValueError`, a failed series an `ArithmeticError`).
"""

class SharpestError(Exception):
    """Base class of all sharpest errors."""

class PoleError(SharpestError, ValueError):
    """A gamma function argument is zero or a negative integer."""

class GammaOverflowError(SharpestError, OverflowError):
    """The gamma function value is not representable as a float."""

class InvalidParameterError(SharpestError, ValueError):
    """Hypergeometric parameter c is zero or a negative integer."""

class NonConvergenceError(SharpestError, ArithmeticError):
    """A series did not meet its stopping rule within the iteration cap."""
    def __init__(self, message, partial_sum=None, iterations=None):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.iterations = iterations

class DivergenceError(SharpestError, ArithmeticError):
    """F(a, b; c; 1) requested with c - a - b <= 0."""

class DomainError(SharpestError, ValueError):
    """An argument lies outside the domain of the operation."""

class HypothesisError(SharpestError, ValueError):
    """Parameters violate a hypothesis the formulas are stated under."""

class ToleranceNotMetError(SharpestError, ArithmeticError):
    """
    Adaptive quadrature exhausted its subdivisions.

    Attributes
    ----------
    estimate: float
        Best value found.
    error: float
        Error estimate of `estimate`.
    """
    def __init__(self, message, estimate, error):
        super().__init__(message)
        self.estimate = estimate
        self.error = error

class NonFiniteIntegrandError(SharpestError, ArithmeticError):
    """The integrand returned inf or nan."""

class BoundViolationError(SharpestError, AssertionError):
    """
    A computed |u| exceeded its bound by more than the oracle error allows.

    This signals a bug in the implementation, not in the mathematics.
    """
    def __init__(self, message, rows):
        super().__init__(message)
        self.rows = rows

class OutOfTheoremWarning(UserWarning):
    """A value was computed for parameters outside the stated theorems."""
