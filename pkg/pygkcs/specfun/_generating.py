#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Generating identities of the two polynomial families used by the coherent states:
the bilinear (Poisson-kernel) identity of the Meixner-Pollaczek polynomials and the generating
formula of the Laguerre polynomials weighted with terminating Gauss functions.
Each identity is exposed as a pair: the closed form and the truncated series it sums.
"""

from __future__ import annotations
import math
import cmath
import typing
import logging
import itertools
from ._error import DomainError
from ._series import SeriesEval, sum_series, DEFAULT_TOLERANCE, DEFAULT_MAX_TERMS
from ._hypergeometric import hyp1f1, hyp2f1
from ._orthopoly import MPPolyParams


_logger = logging.getLogger(__name__)


def mp_bilinear_closed(mu:      float,
                       gamma:   float,
                       x:       float,
                       y:       float,
                       theta1:  float,
                       theta2:  float,
                       literal: bool = False,
                       tol:     float = DEFAULT_TOLERANCE) -> complex:
    """
    Closed form of ``Σ_m m!/(γ)_m μ^m P_m^{(γ/2)}(x; θ₁) P_m^{(γ/2)}(y; θ₂)``::

        (1 - μe^{i(θ₁-θ₂)})^{-λ-iy} (1 - μe^{i(θ₂-θ₁)})^{-λ-ix} (1 - μe^{i(θ₁+θ₂)})^{ix+iy}
            · ₂F₁(λ+ix, λ+iy; γ; -4μ sinθ₁ sinθ₂ / |1 - μe^{i(θ₂-θ₁)}|²)

    where ``λ = γ/2``. All powers are taken on the principal branch; their bases lie in the right half-plane.
    The Gauss function argument is real and non-positive, so the Pfaff route of :func:`hyp2f1` applies.

    With ``literal=True`` the Gauss function is evaluated with both numerator parameters equal to
    ``λ+ix``. This variant coincides with the correct one only when ``x = y``.

    >>> round(abs(mp_bilinear_closed(1e-12, 2.5, 0.3, -0.4, 1.0, 2.0) - 1), 9)
    0.0
    """
    _validate_bilinear(mu, gamma, theta1, theta2)
    lam = 0.5 * gamma
    a = 1.0 - mu * cmath.exp(1j * (theta1 - theta2))
    b = 1.0 - mu * cmath.exp(1j * (theta2 - theta1))
    c = 1.0 - mu * cmath.exp(1j * (theta1 + theta2))
    z = -4.0 * mu * math.sin(theta1) * math.sin(theta2) / abs(b) ** 2
    second = lam + 1j * (x if literal else y)
    gauss = hyp2f1(lam + 1j * x, second, gamma, z, tol=tol)
    log_prefactor = (-lam - 1j * y) * cmath.log(a) + (-lam - 1j * x) * cmath.log(b) + (1j * (x + y)) * cmath.log(c)
    out = cmath.exp(log_prefactor) * gauss.value
    _logger.debug('Bilinear MP closed form at mu=%r gamma=%r x=%r y=%r: %r (%d terms)',
                  mu, gamma, x, y, out, gauss.terms_used)
    return out


def mp_bilinear_series(mu:        float,
                       gamma:     float,
                       x:         float,
                       y:         float,
                       theta1:    float,
                       theta2:    float,
                       tol:       float = DEFAULT_TOLERANCE,
                       max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    The series side of :func:`mp_bilinear_closed`, summed with orthonormalized polynomials
    (``m!/(γ)_m P_m P_m = p̂_m p̂_m``).

    >>> round(mp_bilinear_series(0.5, 2.0, 0.0, 0.0, math.pi / 2, math.pi / 2).real, 10) == round(math.log(3), 10)
    True
    """
    _validate_bilinear(mu, gamma, theta1, theta2)
    lam = 0.5 * gamma
    px = _normalized_mp_iter(MPPolyParams(lam, theta1), x)
    py = _normalized_mp_iter(MPPolyParams(lam, theta2), y)
    terms = (mu ** m * u * v for m, u, v in zip(itertools.count(), px, py))
    return sum_series(terms, tol=tol, max_terms=max_terms, ratio_window=10, what='Bilinear MP series')


def laguerre_gen_closed(t:   complex,
                        c:   complex,
                        nu:  float,
                        y:   complex,
                        u:   float,
                        tol: float = DEFAULT_TOLERANCE) -> complex:
    """
    Closed form of ``Σ_n tⁿ ₂F₁(-n, c; 1+ν; y) L_n^{(ν)}(u)``::

        (1-t)^{-1+c-ν} (1-t+yt)^{-c} exp(-ut/(1-t)) ₁F₁(c; 1+ν; yut / ((1-t)(1-t+yt)))

    >>> laguerre_gen_closed(0, 1.5 + 0.8j, 1.2, 0.3, 0.9) == 1
    True
    >>> t, nu, u = 0.3, 0.5, 2.0
    >>> bool(abs(laguerre_gen_closed(t, 1.0, nu, 0.0, u) - (1 - t) ** (-1 - nu) * math.exp(-u * t / (1 - t))) < 1e-14)
    True
    """
    t, c, y = complex(t), complex(c), complex(y)
    _validate_laguerre_gen(t, nu, u)
    d = 1.0 - t + y * t
    if d == 0:
        raise DomainError(f'The Laguerre generating formula is singular at 1 - t + yt = 0 (t={t}, y={y})')
    w = y * u * t / ((1.0 - t) * d)
    confluent = hyp1f1(c, 1.0 + nu, w, tol=tol)
    log_prefactor = (-1.0 + c - nu) * cmath.log(1.0 - t) - c * cmath.log(d) - u * t / (1.0 - t)
    return cmath.exp(log_prefactor) * confluent.value


def laguerre_gen_series(t:         complex,
                        c:         complex,
                        nu:        float,
                        y:         complex,
                        u:         float,
                        tol:       float = DEFAULT_TOLERANCE,
                        max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    The series side of :func:`laguerre_gen_closed`.
    The terminating Gauss coefficients ``₂F₁(-n, c; 1+ν; y)`` are generated by the contiguous recurrence in ``n``,
    which is neutrally stable for ``|1 - y| = 1`` (the case of the coherent states) where the direct sums would
    cancel catastrophically.
    """
    t, c, y = complex(t), complex(c), complex(y)
    _validate_laguerre_gen(t, nu, u)

    def terms() -> typing.Iterator[complex]:
        for n, gauss, lag in zip(itertools.count(), _terminating_gauss_iter(c, 1.0 + nu, y), _laguerre_iter(nu, u)):
            yield t ** n * gauss * lag

    return sum_series(terms(), tol=tol, max_terms=max_terms, ratio_window=10, what='Laguerre generating series')


def _normalized_mp_iter(p: MPPolyParams, x: float) -> typing.Iterator[float]:
    sin_t, cos_t = math.sin(p.theta), math.cos(p.theta)
    prev, cur = 0.0, 1.0
    for k in itertools.count():
        yield cur
        prev, cur = cur, (2.0 * (x * sin_t + (k + p.lam) * cos_t) * cur
                          - math.sqrt(k * (k + 2.0 * p.lam - 1.0)) * prev) / math.sqrt((k + 1.0) * (k + 2.0 * p.lam))


def _terminating_gauss_iter(b: complex, c: float, y: complex) -> typing.Iterator[complex]:
    prev, cur = 0j, 1 + 0j
    for n in itertools.count():
        yield cur
        prev, cur = cur, ((2 * n + c - (b + n) * y) * cur + n * (y - 1.0) * prev) / (c + n)


def _laguerre_iter(a: float, u: float) -> typing.Iterator[float]:
    prev, cur = 0.0, 1.0
    for k in itertools.count():
        yield cur
        prev, cur = cur, ((2 * k + 1 + a - u) * cur - (k + a) * prev) / (k + 1)


def _validate_bilinear(mu: float, gamma: float, theta1: float, theta2: float) -> None:
    if not 0 < mu < 1:
        raise DomainError(f'The bilinear identity requires 0 < mu < 1; got {mu}')
    if not gamma > 1:
        raise DomainError(f'The bilinear identity requires gamma > 1; got {gamma}')
    for th in (theta1, theta2):
        if not 0 < th < math.pi:
            raise DomainError(f'The MP angle must be in (0, pi); got {th}')


def _validate_laguerre_gen(t: complex, nu: float, u: float) -> None:
    if not abs(t) < 1:
        raise DomainError(f'The Laguerre generating formula requires |t| < 1; got {t}')
    if not nu > -1:
        raise DomainError(f'The Laguerre parameter must exceed -1; got {nu}')
    if not u >= 0:
        raise DomainError(f'The Laguerre argument must be non-negative; got {u}')


def _unittest_mp_bilinear() -> None:
    from pytest import approx, raises

    mu = math.exp(-0.4)
    closed = mp_bilinear_closed(mu, 3.0, 0.7, 0.7, math.pi / 3, math.pi / 3)
    series = mp_bilinear_series(mu, 3.0, 0.7, 0.7, math.pi / 3, math.pi / 3)
    assert series.converged
    assert closed == approx(series.value, rel=1e-8)
    assert abs(closed.imag) < 1e-9 * abs(closed)

    # Distinct arguments and angles; the literal variant is wrong here.
    args = (mu, 2.5, 0.3, -1.1, math.pi / 4, 2 * math.pi / 3)
    series = mp_bilinear_series(*args)
    assert mp_bilinear_closed(*args) == approx(series.value, rel=1e-8)
    assert mp_bilinear_closed(*args, literal=True) != approx(series.value, rel=1e-4)

    with raises(DomainError):
        mp_bilinear_closed(1.0, 2.5, 0, 0, 1, 1)
    with raises(DomainError):
        mp_bilinear_series(0.5, 1.0, 0, 0, 1, 1)
    with raises(DomainError):
        mp_bilinear_series(0.5, 2.0, 0, 0, 0, 1)


def _unittest_laguerre_gen() -> None:
    from pytest import approx, raises

    t = 0.5 * cmath.exp(0.25j * math.pi)
    args = (t, 1.5 + 0.8j, 1.2, 1.0 - cmath.exp(-2j * math.pi / 3), 0.9)
    series = laguerre_gen_series(*args)
    assert series.converged
    assert laguerre_gen_closed(*args) == approx(series.value, rel=1e-8)

    with raises(DomainError):
        laguerre_gen_closed(1.0, 1.0, 0.5, 0.2, 1.0)
    with raises(DomainError):
        laguerre_gen_closed(0.5, 1.0, 0.5, -1.0, 1.0)  # 1 - t + yt = 0
    with raises(DomainError):
        laguerre_gen_series(0.5, 1.0, -1.5, 0.2, 1.0)
