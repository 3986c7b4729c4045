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
Real-parameter gamma, Pochhammer and Gauss hypergeometric functions.

The hypergeometric function is evaluated on [0, 1] only. Inside the unit
interval the power series is summed directly; at x = 1 the Gauss summation
formula is used instead, and close to 1 the Euler transformation is applied
when it makes the series decay faster.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .errors import (DivergenceError, DomainError, GammaOverflowError, InvalidParameterError,
                     NonConvergenceError, PoleError)

logger = logging.getLogger(__name__)

LANCZOS_G = 7
_LANCZOS_COEFFS = (0.99999999999980993, 676.5203681218851, -1259.1392167224028,
                   771.32342877765313, -176.61502916214059, 12.507343278686905,
                   -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# largest x with finite Gamma(x) in double precision
MAX_GAMMA_ARG = 171.6243769563027

SERIES_RTOL = 1e-16
SERIES_STREAK = 3
SERIES_MAX_TERMS = 10**6
EULER_SWITCH = 0.9

def is_nonpositive_integer(x: float) -> bool:
    """True if x is one of 0, -1, -2, ..."""
    return x <= 0 and x == math.floor(x)

def _sinpi(x: float) -> float:
    # fmod is exact, keeps the argument small for large |x|
    return math.sin(math.pi * math.fmod(x, 2.0))

def _lanczos(x: float) -> Tuple[float, float]:
    z = x - 1.0
    a = _LANCZOS_COEFFS[0]
    for (i, coeff) in enumerate(_LANCZOS_COEFFS[1:], start=1):
        a += coeff / (z + i)
    return (a, z + LANCZOS_G + 0.5)

def gamma(x: float) -> float:
    """
    The gamma function for real arguments.

    Uses the Lanczos approximation (g = 7) for x >= 1/2 and the reflection
    formula below that.

    Parameters
    ----------
    x: float
        Argument, not a nonpositive integer.

    Returns
    -------
    float:
        Gamma(x), accurate to about 13 significant digits on [-30, 171].

    Raises
    ------
    PoleError
        If x is 0, -1, -2, ...
    GammaOverflowError
        If Gamma(x) is too large to be represented.
    """
    x = float(x)
    if is_nonpositive_integer(x):
        raise PoleError(f'Gamma has a pole at {x}.')
    if x < 0.5:
        if 1.0 - x > MAX_GAMMA_ARG:
            return gamma_sign(x) * math.exp(-log_gamma(1.0 - x) + math.log(math.pi / abs(_sinpi(x))))
        return math.pi / (_sinpi(x) * gamma(1.0 - x))
    if x > MAX_GAMMA_ARG:
        raise GammaOverflowError(f'Gamma({x}) overflows.')
    (a, t) = _lanczos(x)
    # split the power so the intermediate product stays finite near the overflow limit
    half = t ** ((x - 0.5) / 2.0)
    result = _SQRT_2PI * a * (half * math.exp(-t)) * half
    if not math.isfinite(result):
        raise GammaOverflowError(f'Gamma({x}) overflows.')
    return result

def log_gamma(x: float) -> float:
    """
    Natural logarithm of |Gamma(x)|.

    Raises
    ------
    PoleError
        If x is 0, -1, -2, ...
    """
    x = float(x)
    if is_nonpositive_integer(x):
        raise PoleError(f'Gamma has a pole at {x}.')
    if x < 0.5:
        return math.log(math.pi / abs(_sinpi(x))) - log_gamma(1.0 - x)
    (a, t) = _lanczos(x)
    return _HALF_LOG_2PI + (x - 0.5) * math.log(t) - t + math.log(a)

def gamma_sign(x: float) -> int:
    """Sign of Gamma(x), for x not a pole."""
    if x > 0:
        return 1
    return -1 if int(math.floor(x)) % 2 else 1

def log_gamma_ratio(numerator: Iterable[float], denominator: Iterable[float]) -> Tuple[float, int]:
    """
    Log-scale value of prod(Gamma(numerator)) / prod(Gamma(denominator)).

    Returns
    -------
    (float, int):
        The logarithm of the absolute value and the sign.

    Raises
    ------
    PoleError
        If any argument is a pole.
    """
    log_value = 0.0
    sign = 1
    for x in numerator:
        log_value += log_gamma(x)
        sign *= gamma_sign(x)
    for x in denominator:
        log_value -= log_gamma(x)
        sign *= gamma_sign(x)
    return (log_value, sign)

def gamma_ratio(numerator: Iterable[float], denominator: Iterable[float]) -> float:
    """
    prod(Gamma(numerator)) / prod(Gamma(denominator)), summed in log space
    with a single exponentiation at the end.
    """
    (log_value, sign) = log_gamma_ratio(numerator, denominator)
    try:
        return sign * math.exp(log_value)
    except OverflowError as e:
        raise GammaOverflowError(f'Gamma ratio exp({log_value}) overflows.') from e

def pochhammer(a: float, k: int) -> float:
    """
    Rising factorial (a)_k = a (a + 1) ... (a + k - 1).

    Always uses the product form, so (a)_{k+1} = (a)_k * (a + k) holds exactly.
    """
    if k < 0 or int(k) != k:
        raise DomainError(f'Pochhammer index must be a nonnegative integer, got {k}.')
    result = 1.0
    for i in range(int(k)):
        result *= a + i
    return result

@dataclass(frozen=True)
class Hyp2F1Params:
    """
    Parameters of F(a, b; c; x) with a real argument x in [0, 1].
    """
    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        if is_nonpositive_integer(self.c):
            raise InvalidParameterError(f'c = {self.c} is zero or a negative integer.')
        if not 0.0 <= self.x <= 1.0:
            raise DomainError(f'Hypergeometric argument {self.x} is outside [0, 1].')
        if self.x == 1.0 and self.c - self.a - self.b <= 0:
            raise DivergenceError(f'F({self.a}, {self.b}; {self.c}; 1) diverges: c - a - b <= 0.')

    def terminates(self) -> bool:
        """True if the series is a polynomial."""
        return is_nonpositive_integer(self.a) or is_nonpositive_integer(self.b)

def _series(a: float, b: float, c: float, x: float) -> float:
    term = 1.0
    total = 1.0
    streak = 0
    for k in range(SERIES_MAX_TERMS):
        term = term * ((a + k) * (b + k)) * x / ((c + k) * (k + 1.0))
        total += term
        if term == 0.0:
            return total
        if abs(term) <= SERIES_RTOL * abs(total):
            streak += 1
            if streak >= SERIES_STREAK:
                return total
        else:
            streak = 0
    raise NonConvergenceError(f'F({a}, {b}; {c}; {x}) did not converge in {SERIES_MAX_TERMS} terms.',
                              partial_sum=total, iterations=SERIES_MAX_TERMS)

def _transformed(a: float, b: float, c: float, x: float) -> float:
    return (1.0 - x) ** (c - (a + b)) * _series(c - a, c - b, c, x)

def hyp2f1(params: Hyp2F1Params) -> float:
    """
    The Gauss hypergeometric function F(a, b; c; x) for x in [0, 1].

    The direct power series is canonical. For x > 0.9 the Euler transformed
    series is used instead when its c - a - b is larger, i.e. when it decays
    faster. Terminating series are always summed directly, term by term.
    x = 1 is routed to `hyp2f1_at_one`.

    Raises
    ------
    NonConvergenceError
        If the series does not settle within the iteration cap.
    """
    (a, b, c, x) = (params.a, params.b, params.c, params.x)
    if x == 1.0:
        return hyp2f1_at_one(a, b, c)
    if x > EULER_SWITCH and not params.terminates() and (a + b) - c > c - (a + b):
        logger.debug('F(%g, %g; %g; %g) via Euler transformation', a, b, c, x)
        return _transformed(a, b, c, x)
    return _series(a, b, c, x)

def hyp2f1_eval(a: float, b: float, c: float, x: float) -> float:
    """Shorthand for `hyp2f1(Hyp2F1Params(a, b, c, x))`."""
    return hyp2f1(Hyp2F1Params(a, b, c, x))

def hyp2f1_euler_transformed(params: Hyp2F1Params) -> float:
    """
    (1 - x)^(c - a - b) * F(c - a, c - b; c; x), always evaluated on the
    transformed series. Equal to `hyp2f1(params)`.
    """
    if params.x >= 1.0:
        raise DomainError('The Euler transformed form needs x < 1.')
    return _transformed(params.a, params.b, params.c, params.x)

def hyp2f1_at_one(a: float, b: float, c: float) -> float:
    """
    F(a, b; c; 1) = Gamma(c) Gamma(c - a - b) / (Gamma(c - a) Gamma(c - b)).

    Raises
    ------
    DivergenceError
        If c - a - b <= 0.
    InvalidParameterError
        If c is zero or a negative integer.
    """
    if is_nonpositive_integer(c):
        raise InvalidParameterError(f'c = {c} is zero or a negative integer.')
    if c - a - b <= 0:
        raise DivergenceError(f'F({a}, {b}; {c}; 1) diverges: c - a - b = {c - a - b} <= 0.')
    if is_nonpositive_integer(c - a) or is_nonpositive_integer(c - b):
        return 0.0
    return gamma_ratio((c, c - a - b), (c - a, c - b))

def monotone_direction(a: float, b: float, c: float) -> Optional[int]:
    """
    Direction of x -> F(a, b; c; x) on (0, 1) when c > 0, a <= c and b <= c.

    Returns
    -------
    Optional[int]:
        -1 if non-increasing (ab < 0), 1 if non-decreasing (ab > 0), 0 if
        constant (a = 0 or b = 0), None if the hypotheses do not hold.
    """
    if not (c > 0 and a <= c and b <= c):
        return None
    if a == 0 or b == 0:
        return 0
    return -1 if a * b < 0 else 1
