#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Confluent and Gauss hypergeometric functions with complex parameters.

Both evaluators return :class:`SeriesEval` so that the caller can see how many terms were used and
what the neglected tail was estimated to be. Polynomial cases (a non-positive integer numerator
parameter) are summed exactly and never raise :class:`ConvergenceError`.
"""

from __future__ import annotations
import math
import cmath
import typing
import logging
import numpy
from ._error import DomainError, ConvergenceError
from ._series import SeriesEval, sum_series, DEFAULT_TOLERANCE, DEFAULT_MAX_TERMS
from ._gamma import log_gamma
from ._quadrature_rules import tanh_sinh_unit_interval


CANCELLATION_THRESHOLD = 6.0
"""
Above this magnitude of the imaginary part of the argument the Taylor series of ₁F₁ loses about
``|Im z| / ln 10`` decimal digits, so the Euler integral representation is used where it applies.
"""

_MAX_EULER_ABSCISSA = 6.5

_logger = logging.getLogger(__name__)


def hyp1f1(a:         complex,
           c:         complex,
           z:         complex,
           tol:       float = DEFAULT_TOLERANCE,
           max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    Kummer's confluent hypergeometric function ``₁F₁(a; c; z)``.

    >>> hyp1f1(-2, 1, 3).real  # L_2(3) = (9 - 12 + 2) / 2
    -0.5
    >>> round(hyp1f1(1, 1, 1.5).real, 12) == round(math.exp(1.5), 12)
    True
    >>> hyp1f1(1, -2, 1.0)
    Traceback (most recent call last):
    ...
    pygkcs.specfun._error.DomainError: ...
    """
    a, c, z = complex(a), complex(c), complex(z)
    m = _nonpositive_integer(a)
    c_pole = _nonpositive_integer(c)
    if c_pole is not None and (m is None or m > c_pole):
        raise DomainError(f'₁F₁ is undefined for c = {c} unless a is a polynomial index not above {c_pole}')

    if m is not None:
        return _sum_polynomial(_hyp1f1_terms(a, c, z), m, tol, 'terminating ₁F₁')

    if z.real < 0:
        inner = hyp1f1(c - a, c, -z, tol=tol, max_terms=max_terms)
        _logger.debug('₁F₁(%r; %r; %r) via the Kummer transformation', a, c, z)
        return _rescaled(inner, cmath.exp(z), '₁F₁ Kummer transformation')

    if abs(z.imag) > CANCELLATION_THRESHOLD:
        if c.real > a.real > 0:
            return _hyp1f1_euler(a, c, z, tol, max_terms)
        _logger.warning('₁F₁(%r; %r; %r): the Taylor series may lose about %.0f digits to cancellation',
                        a, c, z, abs(z.imag) / math.log(10))

    return sum_series(_hyp1f1_terms(a, c, z), tol=tol, max_terms=max_terms, what='₁F₁ Taylor series')


def hyp2f1(a:         complex,
           b:         complex,
           c:         complex,
           z:         complex,
           tol:       float = DEFAULT_TOLERANCE,
           max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    Gauss hypergeometric function ``₂F₁(a, b; c; z)`` for polynomial cases (any ``z``),
    real negative ``z`` (through the Pfaff transformation) and the open unit disk.

    >>> hyp2f1(-2, 1, 1, 3.0).real  # (1 - z)^2
    4.0
    >>> round(hyp2f1(1, 1, 2, -1.0).real, 12) == round(math.log(2), 12)
    True
    >>> hyp2f1(0.5, 0.5, 1.5, 2.0)
    Traceback (most recent call last):
    ...
    pygkcs.specfun._error.DomainError: ...
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    ma, mb = _nonpositive_integer(a), _nonpositive_integer(b)
    polynomial = min(x for x in (ma, mb, math.inf) if x is not None)
    c_pole = _nonpositive_integer(c)
    if c_pole is not None and not polynomial <= c_pole:
        raise DomainError(f'₂F₁ is undefined for c = {c} unless the series terminates before the pole')

    if math.isfinite(polynomial):
        return _sum_polynomial(_hyp2f1_terms(a, b, c, z), int(polynomial), tol, 'terminating ₂F₁')

    if z.imag == 0 and z.real < 0:
        w = z / (z - 1.0)
        # The transformed terms decay like k^(a - b - 1).
        if a.real > b.real:
            a, b = b, a
        inner = sum_series(_hyp2f1_terms(a, c - b, c, w), tol=tol, max_terms=max_terms, ratio_window=4,
                           what='₂F₁ Pfaff series')
        _logger.debug('₂F₁(%r, %r; %r; %r) via the Pfaff transformation at %r', a, b, c, z, w)
        return _rescaled(inner, (1.0 - z) ** (-a), '₂F₁ Pfaff transformation')

    if abs(z) < 1:
        return sum_series(_hyp2f1_terms(a, b, c, z), tol=tol, max_terms=max_terms, ratio_window=4,
                          what='₂F₁ Taylor series')

    raise DomainError(f'₂F₁ is only supported for |z| < 1, real z < 0 or terminating series; got z = {z}')


def _hyp1f1_terms(a: complex, c: complex, z: complex) -> typing.Iterator[complex]:
    term = 1 + 0j
    k = 0
    while True:
        yield term
        if term == 0:
            return
        term *= (a + k) / (c + k) * z / (k + 1)
        k += 1


def _hyp2f1_terms(a: complex, b: complex, c: complex, z: complex) -> typing.Iterator[complex]:
    term = 1 + 0j
    k = 0
    while True:
        yield term
        if term == 0:
            return
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        k += 1


def _sum_polynomial(terms: typing.Iterator[complex], m: int, tol: float, what: str) -> SeriesEval:
    total = 0j
    for _, term in zip(range(m + 1), terms):
        total += term
    _logger.debug('%s of degree %d: %r', what, m, total)
    return SeriesEval(total, m + 1, 0.0, True, tol)


def _hyp1f1_euler(a: complex, c: complex, z: complex, tol: float, max_terms: int) -> SeriesEval:
    log_prefactor = log_gamma(c) - log_gamma(a) - log_gamma(c - a)
    smallest = min(a.real, (c - a).real)
    s_max = min(_MAX_EULER_ABSCISSA, math.asinh((math.log(1.0 / tol) + 10.0) / (math.pi * smallest)))

    def log_integrand(t: numpy.ndarray, log_t: numpy.ndarray, log_1mt: numpy.ndarray) -> numpy.ndarray:
        return log_prefactor + z * t + (a - 1.0) * log_t + (c - a - 1.0) * log_1mt

    res = tanh_sinh_unit_interval(log_integrand, s_max, tol=tol, max_evaluations=max_terms,
                                  what='₁F₁ Euler integral')
    if not res.converged:
        raise ConvergenceError(f'₁F₁({a}; {c}; {z}) Euler integral did not reach the tolerance {tol}', res)
    return res


def _rescaled(inner: SeriesEval, factor: complex, what: str) -> SeriesEval:
    value = inner.value * factor
    tail = inner.tail_bound * abs(factor)
    if tail > inner.tolerance * max(1.0, abs(value)):
        partial = SeriesEval(value, inner.terms_used, tail, False, inner.tolerance)
        raise ConvergenceError(f'{what}: the tail {tail:.3g} exceeds the tolerance after rescaling', partial)
    return SeriesEval(value, inner.terms_used, tail, inner.converged, inner.tolerance)


def _nonpositive_integer(v: complex) -> typing.Optional[int]:
    if v.imag == 0 and v.real <= 0 and v.real == round(v.real):
        return -int(round(v.real))
    return None


def _unittest_hyp1f1() -> None:
    from pytest import approx, raises

    # Kummer invariance between two independently summed Taylor series.
    for a, c, z in [(0.3 + 1j, 2.5, 1.7 - 0.4j), (1.25 - 2j, 2.5, -3.1 + 2j), (0.7, 1.8, 4.0)]:
        lhs = sum_series(_hyp1f1_terms(complex(a), complex(c), complex(z)), tol=1e-15).value
        rhs = cmath.exp(z) * sum_series(_hyp1f1_terms(complex(c - a), complex(c), complex(-z)), tol=1e-15).value
        assert lhs == approx(rhs, rel=1e-11)
        assert hyp1f1(a, c, z).value == approx(lhs, rel=1e-11)

    # The Euler integral and the Taylor series agree where both are accurate.
    a, c = 1.25 + 0.8j, 2.5
    for y in (6.5, 9.0):
        euler = hyp1f1(a, c, 1j * y)
        assert euler.terms_used > 0
        taylor = sum_series(_hyp1f1_terms(a, c, 1j * y), tol=1e-15)
        assert euler.value == approx(taylor.value, rel=1e-9, abs=1e-12)

    # ₁F₁(a; a; z) = e^z regardless of the route.
    assert hyp1f1(0.5 + 3j, 0.5 + 3j, 12j).value == approx(cmath.exp(12j), rel=1e-9)

    # Degenerate cases.
    assert hyp1f1(0, 3.0, 100.0).value == 1
    assert hyp1f1(-3, -3, 2.0).value == approx(1 + 2 + 2 + 8 / 6)
    with raises(DomainError):
        hyp1f1(-3, -2, 2.0)

    with raises(ConvergenceError):
        hyp1f1(0.5, 1.5, 40.0, max_terms=10)


def _unittest_hyp2f1() -> None:
    from pytest import approx, raises

    # Elementary closed forms.
    z = 0.4 + 0.3j
    assert hyp2f1(1, 1, 2, z).value == approx(-cmath.log(1 - z) / z, rel=1e-12)
    assert hyp2f1(0.5, 1.0, 1.5, -0.25).value == approx(math.atan(0.5) / 0.5, rel=1e-12)
    assert hyp2f1(1.5, 2.0, 2.0, -9.0).value == approx(10.0 ** -1.5, rel=1e-12)

    # Pfaff against direct Taylor inside the disk.
    a, b, c = 1.25 + 0.7j, 1.25 - 0.2j, 2.5
    direct = sum_series(_hyp2f1_terms(a, b, c, -0.6 + 0j), tol=1e-15)
    assert hyp2f1(a, b, c, -0.6).value == approx(direct.value, rel=1e-11)

    with raises(DomainError):
        hyp2f1(1, 1, 2, 1.5j)
    with raises(DomainError):
        hyp2f1(1, 1, -1, 0.5)
