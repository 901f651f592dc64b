#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The regularized resolution of the identity. Integrating the coherent-state projector against the measure
``N(x)Υ(x)dx`` yields the operator::

    O_ε = Σ_m e^{-2β(2m+γ)ε} |ψ_m⟩⟨ψ_m|

which does not depend on the angle ``θ`` and tends to the identity as ``ε → 0``.
It is applied here through the eigenfunction expansion and, independently, through its integral kernel.
"""

from __future__ import annotations
import math
import typing
import logging
import numpy
from ..specfun import ConvergenceError, SeriesEval
from ..gk_model import GKParams, basis_table, eigenvalue
from ._quadrature import QuadratureSpec
from ._kernel import bilinear_kernel_closed
from ._test_functions import TestFunction


DEFAULT_TRUNCATION_THRESHOLD = 1e-14
"""
By default the expansion stops at the first index whose weight ratio ``e^{-4βεm}`` falls below this value.
"""

MAX_TRUNCATION_INDEX = 5000

_PERIODS_PER_PANEL = 2.0

_KERNEL_WIDTHS_PER_PANEL = 0.5

_logger = logging.getLogger(__name__)


def default_truncation(beta: float, epsilon: float) -> int:
    """
    The smallest ``m`` with ``e^{-4βεm} < 1e-14``, capped at :data:`MAX_TRUNCATION_INDEX`.

    >>> default_truncation(1.0, 0.1)
    81
    >>> default_truncation(1.0, 1e-6)
    5000
    """
    if not beta > 0 or not epsilon > 0:
        raise ValueError(f'Invalid beta {beta} or epsilon {epsilon}')
    m = int(math.floor(math.log(1.0 / DEFAULT_TRUNCATION_THRESHOLD) / (4.0 * beta * epsilon))) + 1
    return min(m, MAX_TRUNCATION_INDEX)


def apply_O_epsilon(theta:   float,
                    gamma:   float,
                    beta:    float,
                    epsilon: float,
                    phi:     TestFunction,
                    u:       typing.Union[float, numpy.ndarray],
                    m_cap:   typing.Optional[int] = None,
                    quad:    QuadratureSpec = QuadratureSpec()) -> typing.Union[float, numpy.ndarray]:
    """
    ``(O_ε φ)(u) = Σ_{m ≤ M} e^{-2β(2m+γ)ε} ⟨φ|ψ_m⟩ ψ_m(u)``.

    The coefficients are computed by composite quadrature over the support of ``φ`` with panels narrow enough
    to resolve the highest basis function. The neglected part is bounded through Bessel's inequality by
    ``e^{-2β(2(M+1)+γ)ε} (‖φ‖² - Σ c_m²)^{1/2}``; if that exceeds ``tolerance · ‖φ‖``,
    :class:`pygkcs.specfun.ConvergenceError` is raised.
    The angle ``θ`` is accepted for symmetry with the coherent-state API and is only validated.

    >>> from ._test_functions import EigenCombination
    >>> p = GKParams.from_gamma(2.5, 1.0)
    >>> phi = EigenCombination([0.0, 1.0], p)
    >>> u = numpy.array([0.5, 1.5])
    >>> bool(numpy.allclose(apply_O_epsilon(1.0, 2.5, 1.0, 0.1, phi, u), phi.apply_exact(0.1, u), atol=1e-9))
    True
    """
    p = _validated_params(theta, gamma, beta, epsilon)
    m_max = default_truncation(beta, epsilon) if m_cap is None else int(m_cap)
    if m_max < 0:
        raise ValueError(f'Invalid truncation index: {m_max}')

    coefficients = expansion_coefficients(p, phi, m_max, quad)
    norm_squared = phi.norm_squared
    residual = math.sqrt(max(0.0, norm_squared - float(coefficients @ coefficients)))
    bound = math.exp(-2.0 * beta * (2.0 * (m_max + 1) + gamma) * epsilon) * residual
    if bound > quad.tolerance * math.sqrt(norm_squared):
        partial = SeriesEval(0.0, m_max + 1, bound, False, quad.tolerance)
        _logger.warning('O_eps truncation at M=%d leaves %.3g for %r at epsilon=%r', m_max, bound, phi, epsilon)
        raise ConvergenceError(f'The expansion of O_eps truncated at M={m_max} leaves {bound:.3g} '
                               f'(tolerance {quad.tolerance:.3g})', partial)

    uu = numpy.asarray(u, dtype=float)
    damping = numpy.exp(-2.0 * beta * (2.0 * numpy.arange(m_max + 1) + gamma) * epsilon)
    out = (damping * coefficients) @ basis_table(p, m_max, uu.reshape(-1))
    _logger.debug('O_eps applied to %r at epsilon=%r with M=%d, truncation bound %.3g', phi, epsilon, m_max, bound)
    out = out.reshape(uu.shape)
    return float(out) if numpy.ndim(u) == 0 else out


def expansion_coefficients(p: GKParams, phi: TestFunction, m_max: int, quad: QuadratureSpec) -> numpy.ndarray:
    """
    ``⟨φ|ψ_m⟩`` for ``m = 0 .. m_max``.
    """
    lo, hi = phi.support
    period = 2.0 * math.pi / math.sqrt(eigenvalue(p, m_max))
    nodes, weights = quad.rule(phi.breakpoints, _PERIODS_PER_PANEL * period)
    out: numpy.ndarray = basis_table(p, m_max, nodes) @ (weights * phi(nodes))
    _logger.debug('%d expansion coefficients of %r from %d nodes on [%.3f, %.3f]', m_max + 1, phi, nodes.size, lo, hi)
    return out


def apply_O_epsilon_kernel(theta:   float,
                           gamma:   float,
                           beta:    float,
                           epsilon: float,
                           phi:     TestFunction,
                           u:       typing.Union[float, numpy.ndarray],
                           quad:    QuadratureSpec = QuadratureSpec()) -> typing.Union[float, numpy.ndarray]:
    """
    ``(O_ε φ)(u) = ∫ G_ε(u, ξ) φ(ξ) dξ`` with the closed-form kernel::

        G_ε(u, ξ) = e^{-2βγε} 2β^γ (uξ)^{γ-1/2} e^{-β(u²+ξ²)/2} K(e^{-4βε}; βu², βξ²)

    where ``K`` is :func:`bilinear_kernel_closed`. The kernel concentrates around ``ξ = u`` with the width
    of about ``√(ε/β)``, which sets the panel width.

    >>> from ._test_functions import SmoothBump
    >>> u = numpy.array([1.3, 1.6])
    >>> a = apply_O_epsilon_kernel(1.0, 2.5, 1.0, 0.1, SmoothBump(), u)
    >>> b = apply_O_epsilon(1.0, 2.5, 1.0, 0.1, SmoothBump(), u)
    >>> bool(numpy.allclose(a, b, rtol=1e-7, atol=1e-12))
    True
    """
    _validated_params(theta, gamma, beta, epsilon)
    uu = numpy.asarray(u, dtype=float)
    if not numpy.all(uu >= 0):
        raise ValueError(f'The coordinates must be non-negative; got {u!r}')
    mu = math.exp(-4.0 * beta * epsilon)
    width = math.sqrt(epsilon / beta)
    nodes, weights = quad.rule(phi.breakpoints, _KERNEL_WIDTHS_PER_PANEL * width)
    values = weights * phi(nodes)

    flat = uu.reshape(-1)
    kernel = bilinear_kernel_closed(mu, gamma, beta * flat[:, None] ** 2, beta * nodes[None, :] ** 2)
    with numpy.errstate(divide='ignore'):
        log_envelope = (gamma - 0.5) * numpy.log(flat[:, None] * nodes[None, :]) \
            - 0.5 * beta * (flat[:, None] ** 2 + nodes[None, :] ** 2)
    prefactor = math.exp(-2.0 * beta * gamma * epsilon) * 2.0 * beta ** gamma
    out = prefactor * (numpy.exp(log_envelope) * kernel) @ values
    _logger.debug('O_eps kernel applied to %r at epsilon=%r on %d nodes', phi, epsilon, nodes.size)
    out = out.reshape(uu.shape)
    return float(out) if numpy.ndim(u) == 0 else out


def laguerre_poisson_integral(f:     typing.Callable[[numpy.ndarray], numpy.ndarray],
                              rho:   float,
                              w:     float,
                              gamma: float,
                              quad:  QuadratureSpec = QuadratureSpec()) -> float:
    """
    ``A[f](ρ, w) = ∫₀^∞ K(ρ; w, s) f(s) s^{γ-1} e^{-s} ds``, the Poisson integral of the Laguerre expansion.
    It reproduces ``f(w)`` in the limit ``ρ → 1⁻`` for continuous ``f`` of moderate growth.
    The integration range is truncated where ``e^{-(√s - √w)²/(1-ρ)}`` and ``e^{-s}`` are negligible.

    >>> round(laguerre_poisson_integral(lambda s: numpy.ones_like(s), 0.7, 2.0, 2.5), 6)
    1.0
    """
    if not 0 <= rho < 1:
        raise ValueError(f'The Poisson integral requires 0 <= rho < 1; got {rho}')
    if not w >= 0:
        raise ValueError(f'Invalid evaluation point: {w}')
    log_tol = math.log(1.0 / quad.tolerance)
    reach = math.sqrt(w) + math.sqrt(log_tol * (1.0 - rho)) + 2.0
    upper = max(reach ** 2, w + 2.0 * log_tol)
    width = math.sqrt(1.0 - rho) * (1.0 + math.sqrt(w))
    nodes, weights = quad.rule([0.0, upper], width)
    with numpy.errstate(divide='ignore'):
        log_weight = (gamma - 1.0) * numpy.log(nodes) - nodes
    kernel = bilinear_kernel_closed(rho, gamma, numpy.full_like(nodes, w), nodes)
    return float(numpy.sum(weights * kernel * numpy.exp(log_weight) * f(nodes)))


def _validated_params(theta: float, gamma: float, beta: float, epsilon: float) -> GKParams:
    if not 0 < theta < math.pi:
        raise ValueError(f'The MP angle must be in (0, pi); got {theta}')
    if not epsilon > 0:
        raise ValueError(f'Invalid epsilon: {epsilon}')
    return GKParams.from_gamma(gamma, beta)


def _unittest_operator() -> None:
    from pytest import approx, raises
    from ._test_functions import EigenCombination, Indicator
    from ..specfun import laguerre

    p = GKParams.from_gamma(2.5, 1.0)
    u = numpy.linspace(0.2, 4.0, 9)
    for n in range(9):
        phi = EigenCombination([0.0] * n + [1.0], p)
        got = apply_O_epsilon(math.pi / 2, 2.5, 1.0, 0.05, phi, u)
        assert got == approx(phi.apply_exact(0.05, u), abs=1e-7)

    # The operator does not depend on the angle.
    phi = Indicator(1.0, 2.0)
    a = apply_O_epsilon(0.4, 2.5, 1.0, 0.1, phi, u)
    b = apply_O_epsilon(2.7, 2.5, 1.0, 0.1, phi, u)
    assert a == approx(b, rel=1e-14, abs=1e-15)
    assert apply_O_epsilon_kernel(1.0, 2.5, 1.0, 0.1, phi, u) == approx(a, rel=1e-6, abs=1e-9)

    # A cap that is too small is reported rather than silently accepted.
    with raises(ConvergenceError):
        apply_O_epsilon(1.0, 2.5, 1.0, 0.01, phi, u, m_cap=5)

    # The Poisson integral reproduces the degree-one Laguerre polynomial up to the factor rho.
    for rho in (0.3, 0.8):
        got = laguerre_poisson_integral(lambda s: laguerre(1, 1.5, s), rho, 1.7, 2.5)
        assert got == approx(rho * laguerre(1, 1.5, 1.7), rel=1e-6)

    with raises(ValueError):
        apply_O_epsilon(0.0, 2.5, 1.0, 0.1, phi, u)
    with raises(ValueError):
        apply_O_epsilon_kernel(1.0, 2.5, 1.0, 0.1, phi, numpy.array([-1.0]))
