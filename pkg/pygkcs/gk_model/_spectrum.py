#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import numpy
from ..specfun import DomainError
from ._params import GKParams


def eigenvalue(p: GKParams, m: int) -> float:
    """
    ``λ_m = 2β(2m + γ)``: the spectrum of the reduced Hamiltonian. The spacing is exactly ``4β``.

    >>> eigenvalue(GKParams.from_gamma(2.5, 1.0), 3)
    17.0
    """
    _check_index(m)
    return 2.0 * p.beta * (2.0 * m + p.gamma)


def eigenvalue_physical(rho: float, kappa0: float, m: int) -> float:
    """
    The spectrum in the physical parametrization, ``4κ₀⁻¹√ϱ (m + ½ + ¼(√(1 + 4ϱκ₀²) - 2κ₀√ϱ))``.
    It is below :func:`eigenvalue` by the constant ``2ϱ`` because the physical potential is shifted.

    >>> p = GKParams.from_physical(1.0, 1.0)
    >>> round(eigenvalue(p, 4) - eigenvalue_physical(1.0, 1.0, 4), 12)
    2.0
    """
    _check_index(m)
    if not rho > 0 or not kappa0 > 0:
        raise DomainError(f'The physical parameters must be positive; got rho={rho}, kappa0={kappa0}')
    root = math.sqrt(rho)
    return 4.0 / kappa0 * root * (m + 0.5 + 0.25 * (math.sqrt(1.0 + 4.0 * rho * kappa0 ** 2) - 2.0 * kappa0 * root))


@typing.overload
def potential(p: GKParams, xi: float) -> float: ...


@typing.overload
def potential(p: GKParams, xi: numpy.ndarray) -> numpy.ndarray: ...


def potential(p: GKParams, xi: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    ``V(ξ) = β²ξ² + α/ξ²``.

    >>> potential(GKParams.from_reduced(2.0, 1.0), 1.0)
    3.0
    """
    xx = _positive(xi)
    out = p.beta ** 2 * xx ** 2 + p.alpha / xx ** 2
    return float(out) if numpy.ndim(xi) == 0 else out


@typing.overload
def potential_physical(rho: float, kappa0: float, xi: float) -> float: ...


@typing.overload
def potential_physical(rho: float, kappa0: float, xi: numpy.ndarray) -> numpy.ndarray: ...


def potential_physical(rho: float, kappa0: float,
                       xi: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    ``ϱ(ξ/κ₀ - κ₀/ξ)²``: vanishes at the equilibrium ``ξ = κ₀``.

    >>> potential_physical(2.0, 1.5, 1.5)
    0.0
    """
    xx = _positive(xi)
    out = rho * (xx / kappa0 - kappa0 / xx) ** 2
    return float(out) if numpy.ndim(xi) == 0 else out


def _positive(xi: typing.Union[float, numpy.ndarray]) -> numpy.ndarray:
    xx = numpy.asarray(xi, dtype=float)
    if not numpy.all(xx > 0):
        raise DomainError(f'The coordinate must be positive; got {xi!r}')
    return xx


def _check_index(m: int) -> None:
    if m < 0:
        raise ValueError(f'Invalid level index: {m}')


def _unittest_spectrum() -> None:
    from pytest import approx, raises

    for rho, kappa0 in [(1.0, 1.0), (0.3, 2.0), (4.0, 0.7)]:
        p = GKParams.from_physical(rho, kappa0)
        shifts = [eigenvalue(p, m) - eigenvalue_physical(rho, kappa0, m) for m in range(11)]
        assert shifts == approx([2.0 * rho] * 11, abs=1e-12 * eigenvalue(p, 10))
        xi = numpy.linspace(0.2, 5.0, 9)
        assert potential(p, xi) - potential_physical(rho, kappa0, xi) == approx(2.0 * rho, rel=1e-12)

    p = GKParams.from_gamma(1.8, 0.5)
    assert [eigenvalue(p, m + 1) - eigenvalue(p, m) for m in range(5)] == approx([2.0] * 5)

    with raises(ValueError):
        eigenvalue(p, -1)
    with raises(DomainError):
        potential(p, numpy.array([1.0, 0.0]))
