#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import dataclasses
from ..specfun import DomainError


_CONSISTENCY_TOLERANCE = 1e-12


@dataclasses.dataclass(frozen=True)
class GKParams:
    """
    Parameters of the Gol'dman-Krivchenkov Hamiltonian ``-d²/dξ² + β²ξ² + α/ξ²`` on the half-line.
    Use the factory methods instead of the constructor; the constructor validates the consistency
    of the derived fields but does not compute them.

    >>> p = GKParams.from_physical(1.0, 1.0)
    >>> p.alpha, p.beta, round(p.gamma, 15) == round(1 + math.sqrt(5) / 2, 15)
    (1.0, 1.0, True)
    >>> GKParams.from_reduced(0.75, 2.0).gamma
    2.0
    >>> GKParams.from_gamma(2.5, 1.0).alpha
    2.0
    >>> GKParams.from_gamma(1.2, 1.0).rho is None
    True
    >>> GKParams.from_physical(-1.0, 1.0)
    Traceback (most recent call last):
    ...
    pygkcs.specfun._error.DomainError: ...
    """

    alpha: float
    """
    The strength of the centrifugal barrier; at least -1/4 (exclusive), so that ``γ > 1``.
    """

    beta: float
    """
    The oscillator frequency parameter, positive.
    """

    gamma: float
    """
    ``γ = 1 + ½√(1 + 4α)``. The ground state behaves like ``ξ^{γ-1/2}`` at the origin.
    """

    q: float
    """
    ``q = γ - ½``.
    """

    rho: typing.Optional[float] = None
    """
    The physical potential depth ϱ. Known only when ``α > 0``.
    """

    kappa0: typing.Optional[float] = None
    """
    The physical equilibrium position κ₀. Known only when ``α > 0``.
    """

    def __post_init__(self) -> None:
        if not self.beta > 0 or not math.isfinite(self.beta):
            raise DomainError(f'Invalid beta: {self.beta}')
        if not self.alpha > -0.25 or not math.isfinite(self.alpha):
            raise DomainError(f'Invalid alpha (must exceed -1/4): {self.alpha}')
        expected_gamma = 1.0 + 0.5 * math.sqrt(1.0 + 4.0 * self.alpha)
        if abs(self.gamma - expected_gamma) > _CONSISTENCY_TOLERANCE * expected_gamma:
            raise ValueError(f'Inconsistent gamma {self.gamma}; alpha {self.alpha} implies {expected_gamma}')
        if abs(self.q - (self.gamma - 0.5)) > _CONSISTENCY_TOLERANCE * self.gamma:
            raise ValueError(f'Inconsistent q {self.q} for gamma {self.gamma}')
        if (self.rho is None) != (self.kappa0 is None):
            raise ValueError('The physical parameters rho and kappa0 are either both known or both unknown')

    @staticmethod
    def from_physical(rho: float, kappa0: float) -> GKParams:
        """
        ``α = ϱκ₀²``, ``β = √ϱ / κ₀``.
        """
        if not rho > 0 or not kappa0 > 0:
            raise DomainError(f'The physical parameters must be positive; got rho={rho}, kappa0={kappa0}')
        return GKParams._make(rho * kappa0 ** 2, math.sqrt(rho) / kappa0, rho=rho, kappa0=kappa0)

    @staticmethod
    def from_reduced(alpha: float, beta: float) -> GKParams:
        """
        When ``α > 0`` the physical pair is recovered as ``ϱ = β√α``, ``κ₀ = α^{1/4} / β^{1/2}``.
        """
        if alpha > 0 and beta > 0:
            return GKParams._make(alpha, beta, rho=beta * math.sqrt(alpha), kappa0=alpha ** 0.25 / math.sqrt(beta))
        return GKParams._make(alpha, beta)

    @staticmethod
    def from_gamma(gamma: float, beta: float) -> GKParams:
        """
        Inverts ``γ = 1 + ½√(1 + 4α)``: ``α = ((2(γ - 1))² - 1) / 4``.
        For ``γ ≤ 3/2`` the barrier is attractive or absent and there is no physical pair.
        """
        if not gamma > 1:
            raise DomainError(f'gamma must exceed 1; got {gamma}')
        alpha = ((2.0 * (gamma - 1.0)) ** 2 - 1.0) / 4.0
        out = GKParams.from_reduced(alpha, beta)
        # The round trip through alpha may perturb the last digit of gamma.
        return dataclasses.replace(out, gamma=gamma, q=gamma - 0.5)

    @staticmethod
    def _make(alpha: float,
              beta: float,
              rho: typing.Optional[float] = None,
              kappa0: typing.Optional[float] = None) -> GKParams:
        if not alpha > -0.25:
            raise DomainError(f'Invalid alpha (must exceed -1/4): {alpha}')
        gamma = 1.0 + 0.5 * math.sqrt(1.0 + 4.0 * alpha)
        return GKParams(alpha=alpha, beta=beta, gamma=gamma, q=gamma - 0.5, rho=rho, kappa0=kappa0)


def _unittest_gk_params() -> None:
    from pytest import approx, raises

    p = GKParams.from_physical(2.0, 0.5)
    assert p.alpha == approx(0.5)
    assert p.beta == approx(math.sqrt(2.0) / 0.5)
    back = GKParams.from_reduced(p.alpha, p.beta)
    assert back.rho == approx(2.0, rel=1e-14)
    assert back.kappa0 == approx(0.5, rel=1e-14)

    for gamma in (1.2, 1.8, 2.5, 3.5):
        g = GKParams.from_gamma(gamma, 1.0)
        assert g.gamma == gamma
        assert 1.0 + 0.5 * math.sqrt(1.0 + 4.0 * g.alpha) == approx(gamma, rel=1e-14)
        assert (g.rho is None) == (gamma <= 1.5)

    with raises(DomainError):
        GKParams.from_physical(1.0, 0.0)
    with raises(DomainError):
        GKParams.from_reduced(1.0, -1.0)
    with raises(DomainError):
        GKParams.from_reduced(-0.25, 1.0)
    with raises(DomainError):
        GKParams.from_gamma(1.0, 1.0)
    with raises(ValueError):
        GKParams(alpha=1.0, beta=1.0, gamma=2.0, q=1.5)
    with raises(ValueError):
        GKParams(alpha=1.0, beta=1.0, gamma=1 + math.sqrt(5) / 2, q=1.0)
