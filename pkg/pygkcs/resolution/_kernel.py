#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The bilinear Laguerre kernel ``K(ρ; a, b) = Σ_n n!/Γ(n+γ) ρⁿ L_n^{(ν)}(a) L_n^{(ν)}(b)``, ``ν = γ - 1``,
which is the Poisson kernel of the Laguerre expansion and, after the change of variable ``a = βu²``,
the kernel of the operator ``O_ε``.
"""

from __future__ import annotations
import math
import typing
import logging
import numpy
import scipy.special
from ..specfun import DomainError, SeriesEval, DEFAULT_TOLERANCE, DEFAULT_MAX_TERMS
from ..specfun import sum_series, log_gamma, orthonormal_laguerre_table


SMALL_BESSEL_ARGUMENT = 1e-2
"""
Below this Bessel argument the closed form switches to the power series of ``I_ν``, which also covers ``ab = 0``.
"""

_SMALL_BESSEL_TERMS = 8

_logger = logging.getLogger(__name__)


def bilinear_kernel_series(rho:       float,
                           gamma:     float,
                           a:         float,
                           b:         float,
                           tol:       float = DEFAULT_TOLERANCE,
                           max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    The defining series summed with the orthonormalized Laguerre recurrence.
    The individual terms are of the order of ``e^{(a+b)/2}`` while the sum can be exponentially smaller,
    so the small-term test is taken relative to that magnitude.

    >>> round(bilinear_kernel_series(0.5, 2.0, 0.0, 0.0).real, 12) == round(1 / (1 - 0.5) ** 2, 12)
    True
    """
    _validate(rho, gamma, a, b)
    nu = gamma - 1.0
    count = min(max_terms, int(math.ceil((math.log(1.0 / tol) + 20.0) / -math.log(rho))) + 50) if rho > 0 else 1
    table = orthonormal_laguerre_table(count, nu, numpy.array([a, b]), exponent=0.0)
    terms = rho ** numpy.arange(count + 1) * table[:, 0] * table[:, 1]
    return sum_series(terms, tol=tol, max_terms=count, ratio_window=10, floor=math.exp(0.5 * (a + b)),
                      what=f'Laguerre kernel series at rho={rho}')


@typing.overload
def bilinear_kernel_closed(rho: float, gamma: float, a: float, b: float) -> float: ...


@typing.overload
def bilinear_kernel_closed(rho: float, gamma: float, a: numpy.ndarray, b: numpy.ndarray) -> numpy.ndarray: ...


def bilinear_kernel_closed(rho:   float,
                           gamma: float,
                           a:     typing.Union[float, numpy.ndarray],
                           b:     typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    The Hardy-Hille closed form::

        (1-ρ)^{-1} exp(-ρ(a+b)/(1-ρ)) (abρ)^{-ν/2} I_ν(2√(abρ)/(1-ρ))

    evaluated in log space with the exponentially scaled Bessel function. The arguments broadcast.

    >>> round(bilinear_kernel_closed(0.5, 2.0, 0.0, 0.0), 12)
    4.0
    >>> bool(abs(bilinear_kernel_closed(0.6, 2.5, 1.0, 5.0) - bilinear_kernel_series(0.6, 2.5, 1.0, 5.0).real) < 1e-10)
    True
    """
    aa = numpy.asarray(a, dtype=float)
    bb = numpy.asarray(b, dtype=float)
    _validate(rho, gamma, float(numpy.min(aa, initial=0.0)), float(numpy.min(bb, initial=0.0)))
    nu = gamma - 1.0
    q = 1.0 - rho
    product = aa * bb * rho
    z = 2.0 * numpy.sqrt(product) / q
    log_common = -math.log(q) - rho * (aa + bb) / q
    small = z < SMALL_BESSEL_ARGUMENT

    with numpy.errstate(divide='ignore', invalid='ignore'):
        log_bessel = numpy.log(scipy.special.ive(nu, z)) + z
        log_large = log_common - 0.5 * nu * numpy.log(product) + log_bessel
    # (abρ)^{-ν/2} (z/2)^ν = (1-ρ)^{-ν}, so the small-argument branch has no removable singularity.
    quarter = (0.5 * z) ** 2
    series = numpy.zeros_like(z)
    term = numpy.full_like(z, math.exp(-log_gamma(gamma).real))
    for k in range(_SMALL_BESSEL_TERMS):
        series = series + term
        term = term * quarter / ((k + 1.0) * (k + 1.0 + nu))
    log_small = log_common - nu * math.log(q) + numpy.log(series)

    out = numpy.exp(numpy.where(small, log_small, log_large))
    return float(out) if out.ndim == 0 else out


def _validate(rho: float, gamma: float, a: float, b: float) -> None:
    if not 0 <= rho < 1:
        raise DomainError(f'The kernel requires 0 <= rho < 1; got {rho}')
    if not gamma > 1:
        raise DomainError(f'gamma must exceed 1; got {gamma}')
    if not a >= 0 or not b >= 0:
        raise DomainError(f'The kernel arguments must be non-negative; got {a}, {b}')


def _unittest_kernel_routes() -> None:
    from pytest import approx, raises

    for gamma in (1.8, 2.5):
        for rho in (0.3, 0.6, 0.9):
            for a in (0.1, 1.0, 5.0):
                for b in (0.1, 1.0, 5.0):
                    series = bilinear_kernel_series(rho, gamma, a, b, tol=1e-13)
                    assert series.converged
                    scale = math.exp(0.5 * (a + b))
                    assert bilinear_kernel_closed(rho, gamma, a, b) == approx(series.real, rel=1e-8, abs=1e-11 * scale)

    # Vectorized evaluation agrees with the scalar one, including the ab = 0 limit.
    a = numpy.array([0.0, 1e-9, 0.5, 3.0])
    b = numpy.array([2.0, 2.0, 0.0, 4.0])
    vec = bilinear_kernel_closed(0.4, 2.5, a, b)
    for k in range(len(a)):
        assert vec[k] == approx(bilinear_kernel_closed(0.4, 2.5, float(a[k]), float(b[k])), rel=1e-14)
    limit = (1 - 0.4) ** -2.5 * math.exp(-0.4 * 2.0 / 0.6) / math.gamma(2.5)
    assert vec[0] == approx(limit, rel=1e-13)
    assert vec[1] == approx(limit, rel=1e-6)

    with raises(DomainError):
        bilinear_kernel_closed(1.0, 2.5, 1.0, 1.0)
    with raises(DomainError):
        bilinear_kernel_series(0.5, 2.5, -1.0, 1.0)
