#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import dataclasses
from ..specfun import MPPolyParams
from ..gk_model import GKParams


@dataclasses.dataclass(frozen=True)
class CSLabel:
    """
    Identifies a coherent state ``|x, ε⟩`` of the model described by :attr:`params`.

    >>> lab = CSLabel(0.7, math.pi / 3, 0.25, GKParams.from_gamma(2.5, 1.0))
    >>> lab.with_x(-0.7).x, lab.mp_params.lam, round(lab.mu, 12) == round(math.exp(-1.0), 12)
    (-0.7, 1.25, True)
    >>> CSLabel(0.0, 0.0, 0.25, GKParams.from_gamma(2.5, 1.0))
    Traceback (most recent call last):
    ...
    ValueError: ...
    """

    x: float
    """
    The continuous label; the argument of the Meixner-Pollaczek coefficients.
    """

    theta: float
    """
    The Meixner-Pollaczek angle in (0, π).
    """

    epsilon: float
    """
    The regularization parameter; the identity is resolved in the limit ε → 0.
    """

    params: GKParams

    def __post_init__(self) -> None:
        if not math.isfinite(self.x):
            raise ValueError(f'Invalid label x: {self.x}')
        if not 0 < self.theta < math.pi:
            raise ValueError(f'Invalid label theta (must be in (0, pi)): {self.theta}')
        if not self.epsilon > 0 or not math.isfinite(self.epsilon):
            raise ValueError(f'Invalid label epsilon: {self.epsilon}')

    def with_x(self, x: float) -> CSLabel:
        return dataclasses.replace(self, x=x)

    def flipped(self) -> CSLabel:
        """
        The reflected label ``(x, θ) → (-x, π - θ)``.
        """
        return dataclasses.replace(self, x=-self.x, theta=math.pi - self.theta)

    @property
    def mp_params(self) -> MPPolyParams:
        return MPPolyParams(0.5 * self.params.gamma, self.theta)

    @property
    def mu(self) -> float:
        """
        ``μ = e^{-4βε}``, the ratio of consecutive coefficient weights.
        """
        return math.exp(-4.0 * self.params.beta * self.epsilon)

    def same_family(self, other: CSLabel) -> bool:
        """
        True if the two labels differ at most in ``x``.
        """
        return (self.theta, self.epsilon, self.params) == (other.theta, other.epsilon, other.params)
