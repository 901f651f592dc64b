#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import numpy
from ..specfun import DomainError, DEFAULT_COMPOSITE_TOLERANCE, log_gamma
from ._label import CSLabel
from ._normalization import normalization_closed


@typing.overload
def upsilon(theta: float, gamma: float, x: float) -> float: ...


@typing.overload
def upsilon(theta: float, gamma: float, x: numpy.ndarray) -> numpy.ndarray: ...


def upsilon(theta: float, gamma: float, x: typing.Union[float, numpy.ndarray]) -> typing.Union[float, numpy.ndarray]:
    """
    The orthogonality weight of the Meixner-Pollaczek polynomials ``P_m^{(γ/2)}(x; θ)``, normalized to unit mass::

        Υ(x) = (2 sinθ)^{γ-1} sinθ / (π Γ(γ)) · e^{-(π-2θ)x} |Γ(γ/2 + ix)|²

    It decays like ``e^{-(2π-2θ)x}`` as ``x → +∞`` and like ``e^{-2θ|x|}`` as ``x → -∞``.
    Evaluated in log space.

    >>> round(upsilon(math.pi / 2, 2.0, 0.0), 12) == round(2 / math.pi, 12)
    True
    >>> bool(numpy.allclose(upsilon(math.pi / 2, 2.0, numpy.array([-1.0, 1.0])), upsilon(math.pi / 2, 2.0, 1.0)))
    True
    """
    if not 0 < theta < math.pi:
        raise DomainError(f'The MP angle must be in (0, pi); got {theta}')
    if not gamma > 1:
        raise DomainError(f'gamma must exceed 1; got {gamma}')
    xx = numpy.asarray(x, dtype=float)
    sin_t = math.sin(theta)
    log_constant = (gamma - 1.0) * math.log(2.0 * sin_t) + math.log(sin_t) - math.log(math.pi) - log_gamma(gamma).real
    log_value = log_constant - (math.pi - 2.0 * theta) * xx + 2.0 * numpy.real(log_gamma(0.5 * gamma + 1j * xx))
    out = numpy.exp(log_value)
    return float(out) if numpy.ndim(x) == 0 else out


def measure_density(label: CSLabel, tol: float = DEFAULT_COMPOSITE_TOLERANCE) -> float:
    """
    ``N(x) Υ(x)``: the density of the coherent-state resolution of the identity with respect to ``dx``.

    >>> from ..gk_model import GKParams
    >>> lab = CSLabel(0.3, 1.2, 0.1, GKParams.from_gamma(2.5, 1.0))
    >>> bool(abs(measure_density(lab) - measure_density(lab.flipped())) < 1e-9 * measure_density(lab))
    True
    """
    return normalization_closed(label, tol=tol) * upsilon(label.theta, label.params.gamma, label.x)


def _unittest_upsilon() -> None:
    from pytest import approx
    from ..specfun import gauss_legendre_composite

    for gamma in (1.8, 2.5):
        for theta in (math.pi / 3, math.pi / 2, 2 * math.pi / 3):
            nodes, weights = gauss_legendre_composite(numpy.linspace(-40.0, 40.0, 161), 20)
            assert float(numpy.sum(weights * upsilon(theta, gamma, nodes))) == approx(1.0, abs=1e-10)
            assert upsilon(theta, gamma, 1.3) == approx(upsilon(math.pi - theta, gamma, -1.3), rel=1e-13)

    # Decay rates on both sides.
    theta, gamma = math.pi / 3, 2.5
    right = math.log(upsilon(theta, gamma, 31.0) / upsilon(theta, gamma, 30.0))
    left = math.log(upsilon(theta, gamma, -31.0) / upsilon(theta, gamma, -30.0))
    assert right == approx(-(2 * math.pi - 2 * theta), abs=0.1)
    assert left == approx(-2 * theta, abs=0.1)
