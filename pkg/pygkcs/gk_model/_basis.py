#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The normalized eigenfunctions of the Hamiltonian.

:func:`basis_table` is the workhorse used by the coherent states and the resolution of the identity;
it evaluates all levels up to a given index at once through the orthonormal Laguerre recurrence.
The scalar functions below evaluate a single level by the textbook formulas and serve as the
independent reference for the table.
"""

from __future__ import annotations
import math
import typing
import logging
import numpy
from ..specfun import DomainError, log_gamma, laguerre, hyp1f1, pochhammer, orthonormal_laguerre_table
from ._params import GKParams
from ._spectrum import eigenvalue, potential


_TINY_COORDINATE = 1e-300

_logger = logging.getLogger(__name__)


def eigenfunction(p: GKParams, m: int, xi: float) -> float:
    """
    ``ψ_m(ξ) = (2β^γ m!/Γ(γ+m))^{1/2} ξ^{γ-1/2} e^{-βξ²/2} L_m^{(γ-1)}(βξ²)``.
    The normalization ratio is formed in log space.

    >>> p = GKParams.from_gamma(2.0, 1.0)
    >>> round(eigenfunction(p, 0, 1.0), 12) == round(math.sqrt(2.0) * math.exp(-0.5), 12)
    True
    >>> eigenfunction(p, 0, 0.0)
    Traceback (most recent call last):
    ...
    pygkcs.specfun._error.DomainError: ...
    """
    if not xi > 0:
        raise DomainError(f'The coordinate must be positive; got {xi}')
    if m < 0:
        raise ValueError(f'Invalid level index: {m}')
    u = p.beta * xi * xi
    log_norm = 0.5 * (math.log(2.0) + p.gamma * math.log(p.beta)
                      + log_gamma(m + 1.0).real - log_gamma(p.gamma + m).real)
    log_env = log_norm + (p.gamma - 0.5) * math.log(xi) - 0.5 * u
    return math.exp(log_env) * laguerre(m, p.gamma - 1.0, u)


def eigenfunction_hypergeometric(p: GKParams, m: int, xi: float) -> float:
    """
    The same function through the confluent hypergeometric form of the Laguerre polynomial,
    ``L_m^{(γ-1)}(u) = (γ)_m / m! · ₁F₁(-m; γ; u)``.
    """
    if not xi > 0:
        raise DomainError(f'The coordinate must be positive; got {xi}')
    if m < 0:
        raise ValueError(f'Invalid level index: {m}')
    u = p.beta * xi * xi
    log_norm = 0.5 * (math.log(2.0) + p.gamma * math.log(p.beta)
                      + log_gamma(m + 1.0).real - log_gamma(p.gamma + m).real)
    poly = hyp1f1(-m, p.gamma, u).real * pochhammer(p.gamma, m).real / math.factorial(m)
    return math.exp(log_norm + (p.gamma - 0.5) * math.log(xi) - 0.5 * u) * poly


def basis_table(p: GKParams, m_max: int, xi: typing.Union[float, numpy.ndarray]) -> numpy.ndarray:
    """
    ``ψ_m(ξ)`` for ``m = 0 .. m_max`` on the given coordinates, which may include zero.
    The output has the shape ``(m_max + 1,) + numpy.shape(xi)``.

    >>> p = GKParams.from_gamma(2.5, 1.0)
    >>> t = basis_table(p, 4, numpy.array([0.0, 0.5, 2.0]))
    >>> t.shape, t[:, 0].tolist()
    ((5, 3), [0.0, 0.0, 0.0, 0.0, 0.0])
    >>> bool(abs(t[3, 2] - eigenfunction(p, 3, 2.0)) < 1e-13)
    True
    """
    xx = numpy.asarray(xi, dtype=float)
    if not numpy.all(xx >= 0):
        raise DomainError(f'The coordinates must be non-negative; got {xi!r}')
    h = orthonormal_laguerre_table(m_max, p.gamma - 1.0, p.beta * xx * xx, exponent=0.5)
    power = numpy.where(xx > _TINY_COORDINATE,
                        numpy.exp((p.gamma - 0.5) * numpy.log(numpy.maximum(xx, _TINY_COORDINATE))),
                        0.0)
    out: numpy.ndarray = math.sqrt(2.0 * p.beta ** p.gamma) * power * h
    return out


def eigen_residual(p: GKParams, m: int, h: float = 1e-3, lo: float = 0.01, hi: float = 12.0) -> float:
    """
    Relative L² residual of ``(-d²/dξ² + V - λ_m) ψ_m`` with the second derivative replaced by the
    central difference of step ``h`` on ``[lo, hi]``. It converges to zero as ``h²``.

    >>> eigen_residual(GKParams.from_gamma(2.5, 1.0), 2) < 1e-4
    True
    """
    if not 0 < lo < hi or not h > 0:
        raise ValueError(f'Invalid residual grid: [{lo}, {hi}] with step {h}')
    count = int(round((hi - lo) / h)) + 1
    xi = lo + h * numpy.arange(count)
    psi = basis_table(p, m, xi)[m]
    second = (psi[2:] - 2.0 * psi[1:-1] + psi[:-2]) / (h * h)
    interior = xi[1:-1]
    lam = eigenvalue(p, m)
    residual = -second + (potential(p, interior) - lam) * psi[1:-1]
    out = float(numpy.linalg.norm(residual) / numpy.linalg.norm(lam * psi[1:-1]))
    _logger.debug('Eigen-equation residual for m=%d with h=%r: %.3g', m, h, out)
    return out


def _unittest_basis() -> None:
    from pytest import approx, raises

    p = GKParams.from_gamma(1.8, 0.5)
    xi = numpy.array([0.05, 0.6, 1.7, 4.0, 9.0])
    table = basis_table(p, 12, xi)
    for m in (0, 1, 5, 12):
        for k, x in enumerate(xi):
            ref = eigenfunction(p, m, float(x))
            assert table[m, k] == approx(ref, rel=1e-10, abs=1e-14)
            assert eigenfunction_hypergeometric(p, m, float(x)) == approx(ref, rel=1e-9, abs=1e-13)

    # Zero count: ψ_m changes sign exactly m times on the half-line.
    grid = numpy.linspace(1e-3, 15.0, 20001)
    signs = numpy.sign(basis_table(p, 5, grid))
    for m in range(6):
        s = signs[m][signs[m] != 0]
        assert int(numpy.count_nonzero(s[1:] != s[:-1])) == m

    with raises(DomainError):
        basis_table(p, 3, numpy.array([-1.0]))
    with raises(ValueError):
        eigen_residual(p, 0, lo=1.0, hi=0.5)
