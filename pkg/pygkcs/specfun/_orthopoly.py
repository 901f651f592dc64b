#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import cmath
import typing
import logging
import dataclasses
import numpy
from ._error import DomainError, IdentityViolationError
from ._series import DEFAULT_COMPOSITE_TOLERANCE
from ._gamma import log_gamma, pochhammer
from ._hypergeometric import hyp2f1


_RESCALE_THRESHOLD = 1e150

_EPSILON = float(numpy.finfo(float).eps)

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class MPPolyParams:
    """
    Parameters of the Meixner-Pollaczek family ``P_m^{(λ)}(x; θ)``.

    >>> MPPolyParams(1.25, math.pi / 2)
    MPPolyParams(lam=1.25, theta=1.5707963267948966)
    >>> MPPolyParams(0.0, 1.0)
    Traceback (most recent call last):
    ...
    ValueError: ...
    """

    lam: float
    """
    The weight parameter λ > 0. In the coherent-state construction it equals γ/2.
    """

    theta: float
    """
    The angle θ ∈ (0, π).
    """

    def __post_init__(self) -> None:
        if not self.lam > 0:
            raise ValueError(f'Invalid MP parameter lambda: {self.lam}')
        if not 0 < self.theta < math.pi:
            raise ValueError(f'Invalid MP angle theta (must be in (0, pi)): {self.theta}')


@typing.overload
def laguerre(m: int, a: float, u: float) -> float: ...


@typing.overload
def laguerre(m: int, a: float, u: numpy.ndarray) -> numpy.ndarray: ...


def laguerre(m: int, a: float, u: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    Generalized Laguerre polynomial ``L_m^{(a)}(u)`` by the upward three-term recurrence.

    >>> laguerre(0, 0.5, 3.0), laguerre(1, 0.5, 3.0)
    (1.0, -1.5)
    >>> laguerre(2, 0, numpy.array([0.0, 2.0])).tolist()
    [1.0, -1.0]
    """
    if m < 0:
        raise ValueError(f'Invalid polynomial degree: {m}')
    uu = numpy.asarray(u, dtype=float)
    prev = numpy.zeros_like(uu)
    cur = numpy.ones_like(uu)
    for k in range(m):
        prev, cur = cur, ((2 * k + 1 + a - uu) * cur - (k + a) * prev) / (k + 1)
    if numpy.ndim(u) == 0:
        return float(cur)
    return cur


@typing.overload
def mp_poly(m: int, p: MPPolyParams, x: float) -> float: ...


@typing.overload
def mp_poly(m: int, p: MPPolyParams, x: numpy.ndarray) -> numpy.ndarray: ...


def mp_poly(m: int, p: MPPolyParams, x: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    Meixner-Pollaczek polynomial ``P_m^{(λ)}(x; θ)`` by the three-term recurrence.
    This is the authoritative route; :func:`mp_poly_hyp` is the independent cross-check.

    >>> p = MPPolyParams(1.0, math.pi / 2)
    >>> mp_poly(0, p, 3.0), round(mp_poly(1, p, 3.0), 12), round(mp_poly(2, p, 1.0), 12)
    (1.0, 6.0, 1.0)
    """
    if m < 0:
        raise ValueError(f'Invalid polynomial degree: {m}')
    xx = numpy.asarray(x, dtype=float)
    sin_t, cos_t = math.sin(p.theta), math.cos(p.theta)
    prev = numpy.zeros_like(xx)
    cur = numpy.ones_like(xx)
    for k in range(m):
        nxt = (2.0 * (xx * sin_t + (k + p.lam) * cos_t) * cur - (k + 2.0 * p.lam - 1.0) * prev) / (k + 1)
        prev, cur = cur, nxt
    if numpy.ndim(x) == 0:
        return float(cur)
    return cur


def mp_poly_hyp(m: int, p: MPPolyParams, x: float, tol: float = DEFAULT_COMPOSITE_TOLERANCE) -> float:
    """
    The hypergeometric representation ``(2λ)_m e^{imθ} / m! · ₂F₁(-m, λ+ix; 2λ; 1 - e^{-2iθ})``.

    The terminating sum cancels heavily for large degrees and large ``|x|``; the attainable accuracy is
    about machine epsilon times :func:`mp_poly_hyp_cancellation_scale`. The imaginary residue is allowed
    to be within the tolerance relative to the result plus that rounding floor;
    :class:`IdentityViolationError` is raised otherwise.

    >>> p = MPPolyParams(1.0, math.pi / 2)
    >>> round(mp_poly_hyp(2, p, 1.0), 12)
    1.0
    """
    value, scale = _mp_poly_hyp_sum(m, p, x)
    allowed = tol * max(1.0, abs(value.real)) + 64.0 * _EPSILON * scale
    if abs(value.imag) > allowed:
        _logger.warning('MP hypergeometric route: imaginary residue %.3g exceeds %.3g (m=%d, %r, x=%r)',
                        value.imag, allowed, m, p, x)
        raise IdentityViolationError(f'P_{m}({x}) by the hypergeometric route has the imaginary residue '
                                     f'{value.imag!r} above {allowed!r}')
    return value.real


def mp_poly_hyp_cancellation_scale(m: int, p: MPPolyParams, x: float) -> float:
    """
    ``(2λ)_m / m! · Σ_k |k-th term of the ₂F₁ sum|``: the magnitude the terminating sum cancels down from.
    Multiplied by the machine epsilon it bounds the rounding error of :func:`mp_poly_hyp`.

    >>> mp_poly_hyp_cancellation_scale(0, MPPolyParams(1.0, 1.0), 0.0)
    1.0
    """
    return _mp_poly_hyp_sum(m, p, x)[1]


def _mp_poly_hyp_sum(m: int, p: MPPolyParams, x: float) -> typing.Tuple[complex, float]:
    if m < 0:
        raise ValueError(f'Invalid polynomial degree: {m}')
    c = 2.0 * p.lam
    a = p.lam + 1j * x
    z = 1.0 - cmath.exp(-2j * p.theta)
    prefactor = pochhammer(c, m) / math.factorial(m) * cmath.exp(1j * m * p.theta)
    scale = 0.0
    term = 1 + 0j
    for k in range(m + 1):
        scale += abs(term)
        term *= (k - m) * (a + k) / ((c + k) * (k + 1)) * z
    value = prefactor * hyp2f1(-m, a, c, z).value
    return value, abs(prefactor) * scale


def mp_poly_normalized_table(m_max: int,
                             p:     MPPolyParams,
                             x:     typing.Union[float, numpy.ndarray]) -> numpy.ndarray:
    """
    Orthonormalized MP polynomials ``p̂_m = (m! / (2λ)_m)^{1/2} P_m`` for ``m = 0 .. m_max``.
    The output has the shape ``(m_max + 1,) + numpy.shape(x)``.
    The normalization keeps the values bounded by a slowly growing function of ``m``, so that series
    with thousands of terms can be formed without overflow.

    >>> p = MPPolyParams(1.25, 1.0)
    >>> t = mp_poly_normalized_table(3, p, numpy.array([0.5, -2.0]))
    >>> t.shape
    (4, 2)
    >>> bool(numpy.allclose(t[3], mp_poly(3, p, numpy.array([0.5, -2.0])) / math.sqrt(2.5 * 3.5 * 4.5 / 6)))
    True
    """
    if m_max < 0:
        raise ValueError(f'Invalid table size: {m_max}')
    xx = numpy.asarray(x, dtype=float)
    sin_t, cos_t = math.sin(p.theta), math.cos(p.theta)
    out = numpy.empty((m_max + 1,) + xx.shape)
    prev = numpy.zeros_like(xx)
    cur = numpy.ones_like(xx)
    out[0] = cur
    for k in range(m_max):
        nxt = (2.0 * (xx * sin_t + (k + p.lam) * cos_t) * cur - math.sqrt(k * (k + 2.0 * p.lam - 1.0)) * prev) \
            / math.sqrt((k + 1.0) * (k + 2.0 * p.lam))
        prev, cur = cur, nxt
        out[k + 1] = cur
    return out


def orthonormal_laguerre_table(m_max:    int,
                               alpha:    float,
                               u:        typing.Union[float, numpy.ndarray],
                               exponent: float = 0.5) -> numpy.ndarray:
    """
    ``(m! / Γ(m+α+1))^{1/2} e^{-exponent·u} L_m^{(α)}(u)`` for ``m = 0 .. m_max``, shaped like
    :func:`mp_poly_normalized_table`. The recurrence runs on a per-node mantissa with a separate
    logarithmic scale, so neither the exponential factor nor the polynomial growth can overflow.

    >>> t = orthonormal_laguerre_table(2, 0.0, numpy.array([0.0, 1.0]), exponent=0.0)
    >>> numpy.round(t, 12).tolist()
    [[1.0, 1.0], [1.0, 0.0], [1.0, -0.5]]
    """
    if m_max < 0:
        raise ValueError(f'Invalid table size: {m_max}')
    if not alpha > -1:
        raise DomainError(f'The Laguerre parameter must exceed -1; got {alpha}')
    uu = numpy.asarray(u, dtype=float)
    log_scale = -exponent * uu - 0.5 * log_gamma(alpha + 1.0).real + numpy.zeros_like(uu)
    mantissa = numpy.empty((m_max + 1,) + uu.shape)
    logs = numpy.empty((m_max + 1,) + uu.shape)
    prev = numpy.zeros_like(uu)
    cur = numpy.ones_like(uu)
    mantissa[0], logs[0] = cur, log_scale
    for k in range(m_max):
        nxt = ((2 * k + alpha + 1.0 - uu) * cur - math.sqrt(k * (k + alpha)) * prev) \
            / math.sqrt((k + 1.0) * (k + alpha + 1.0))
        prev, cur = cur, nxt
        big = numpy.abs(cur) > _RESCALE_THRESHOLD
        if numpy.any(big):
            factor = numpy.where(big, numpy.abs(cur), 1.0)
            cur = cur / factor
            prev = prev / factor
            log_scale = log_scale + numpy.log(factor)
        mantissa[k + 1], logs[k + 1] = cur, log_scale
    with numpy.errstate(divide='ignore'):
        out: numpy.ndarray = numpy.sign(mantissa) * numpy.exp(numpy.log(numpy.abs(mantissa)) + logs)
    return out


def _unittest_laguerre() -> None:
    from pytest import approx, raises
    from ._hypergeometric import hyp1f1

    for m in range(21):
        for a in (0.0, 0.5, 1.5, 3.0):
            for u in (0.1, 0.7, 2.0):
                expected = hyp1f1(-m, a + 1, u).real * pochhammer(a + 1, m).real / math.factorial(m)
                assert laguerre(m, a, u) == approx(expected, rel=1e-11, abs=1e-11 * abs(expected) + 1e-300)

    # Orthonormality of the scaled table under Gauss-Laguerre quadrature for alpha = 0.
    nodes, weights = numpy.polynomial.laguerre.laggauss(40)
    table = orthonormal_laguerre_table(15, 0.0, nodes, exponent=0.0)
    gram = (table * weights) @ table.T
    assert gram == approx(numpy.eye(16), abs=1e-10)

    # Far outside the oscillatory region the mantissa is rescaled instead of overflowing.
    far = orthonormal_laguerre_table(300, 1.5, numpy.array([900.0, 2000.0]))
    assert numpy.all(numpy.isfinite(far))

    with raises(ValueError):
        laguerre(-1, 0.0, 1.0)
    with raises(DomainError):
        orthonormal_laguerre_table(3, -1.0, 1.0)


def _unittest_mp_poly() -> None:
    from pytest import approx, raises

    p = MPPolyParams(1.25, math.pi / 3)
    x = numpy.linspace(-5, 5, 21)
    assert mp_poly(1, p, x) == approx(2.0 * (x * math.sin(p.theta) + p.lam * math.cos(p.theta)))

    # Parity under the reflection (x, θ) -> (-x, π - θ).
    q = MPPolyParams(p.lam, math.pi - p.theta)
    for m in range(12):
        assert mp_poly(m, q, -x) == approx((-1) ** m * mp_poly(m, p, x), rel=1e-12, abs=1e-12)

    # The normalized table is the plain recurrence rescaled.
    table = mp_poly_normalized_table(30, p, x)
    for m in (0, 1, 7, 30):
        norm = math.sqrt(pochhammer(2 * p.lam, m).real / math.factorial(m))
        assert table[m] * norm == approx(mp_poly(m, p, x), rel=1e-11, abs=1e-11)

    # Cross-route agreement in the well-conditioned regime.
    for m in range(9):
        for xv in (-1.5, 0.0, 0.4, 2.0):
            assert mp_poly_hyp(m, p, xv) == approx(mp_poly(m, p, xv), rel=1e-11, abs=1e-11)

    with raises(ValueError):
        mp_poly(-1, p, 0.0)
    with raises(ValueError):
        MPPolyParams(1.0, math.pi)
