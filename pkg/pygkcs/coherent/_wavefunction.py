#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The coordinate representation ``⟨ξ|x,ε⟩`` of the normalized coherent state.

The series route sums the eigenfunction expansion directly; the closed route applies the Laguerre generating
formula with the Meixner-Pollaczek coefficients written as terminating Gauss functions, which collapses the sum
into one confluent hypergeometric function per coordinate.
"""

from __future__ import annotations
import math
import cmath
import typing
import logging
import numpy
from ..specfun import DomainError, DEFAULT_COMPOSITE_TOLERANCE, log_gamma, hyp1f1, sum_series
from ..specfun import mp_poly_normalized_table
from ..gk_model import basis_table
from ._label import CSLabel
from ._normalization import normalization_closed, normalization_series, require_real


SERIES_TERM_CAP = 2000
"""
The wavefunction series gives up with :class:`pygkcs.specfun.ConvergenceError` beyond this many terms.
"""

_SERIES_RATIO_WINDOW = 10

_logger = logging.getLogger(__name__)


@typing.overload
def cs_wavefunction_closed(label: CSLabel, xi: float, tol: float = ...) -> complex: ...


@typing.overload
def cs_wavefunction_closed(label: CSLabel, xi: numpy.ndarray, tol: float = ...) -> numpy.ndarray: ...


def cs_wavefunction_closed(label: CSLabel,
                           xi:    typing.Union[float, numpy.ndarray],
                           tol:   float = DEFAULT_COMPOSITE_TOLERANCE) -> typing.Union[complex, numpy.ndarray]:
    """
    ::

        √(2β^γ / Γ(γ)) e^{-εβγ} N^{-1/2} |1-τ|^{-γ} e^{-2x·arg(1-τ)} ξ^{γ-1/2}
            · exp(-½βξ² (1+τ)/(1-τ)) ₁F₁(γ/2 + ix; γ; iY)

    where ``τ = e^{-2βε + iθ}`` and ``Y = 2βξ² e^{-2βε} sinθ / |1-τ|²``.
    The value is real; the imaginary residue is checked against the accuracy of the confluent function and
    kept in the output.

    >>> from ..gk_model import GKParams
    >>> lab = CSLabel(0.4, math.pi / 2, 0.1, GKParams.from_gamma(2.5, 1.0))
    >>> bool(abs(cs_wavefunction_closed(lab, 1.2) - cs_wavefunction_series(lab, 1.2)) < 1e-8)
    True
    >>> cs_wavefunction_closed(lab, 0.0) == 0
    True
    """
    xx = _coordinates(xi)
    p = label.params
    beta, g = p.beta, p.gamma
    tau = cmath.exp(-2.0 * beta * label.epsilon + 1j * label.theta)
    one_minus_tau = 1.0 - tau
    damping = math.exp(-2.0 * beta * label.epsilon)
    log_constant = 0.5 * (math.log(2.0) + g * math.log(beta) - log_gamma(g).real) \
        - label.epsilon * beta * g \
        - 0.5 * math.log(normalization_closed(label, tol=tol)) \
        - g * math.log(abs(one_minus_tau)) \
        - 2.0 * label.x * cmath.phase(one_minus_tau)
    ratio = (1.0 + tau) / one_minus_tau
    a = 0.5 * g + 1j * label.x

    out = numpy.zeros(xx.shape, dtype=complex)
    for index, point in numpy.ndenumerate(xx):
        if point == 0:
            continue
        u = beta * float(point) ** 2
        y = 2.0 * u * damping * math.sin(label.theta) / abs(one_minus_tau) ** 2
        confluent = hyp1f1(a, g, 1j * y, tol=tol)
        prefactor = cmath.exp(log_constant + (g - 0.5) * math.log(point) - 0.5 * u * ratio)
        value = prefactor * confluent.value
        require_real(value, f'⟨ξ={point}|x,ε⟩', allowance=10.0 * abs(prefactor) * confluent.tail_bound)
        out[index] = value
    _logger.debug('Closed coherent wavefunction at %r on %d points', label, out.size)
    return complex(out) if numpy.ndim(xi) == 0 else out


@typing.overload
def cs_wavefunction_series(label: CSLabel, xi: float, tol: float = ...) -> complex: ...


@typing.overload
def cs_wavefunction_series(label: CSLabel, xi: numpy.ndarray, tol: float = ...) -> numpy.ndarray: ...


def cs_wavefunction_series(label: CSLabel,
                           xi:    typing.Union[float, numpy.ndarray],
                           tol:   float = DEFAULT_COMPOSITE_TOLERANCE) -> typing.Union[complex, numpy.ndarray]:
    """
    ``N^{-1/2} e^{-εβγ} Σ_m e^{-2βεm} p̂_m(x) ψ_m(ξ)``, each coordinate summed with its own stopping test.
    The number of terms is limited to :data:`SERIES_TERM_CAP`; if the sum has not converged by then,
    :class:`pygkcs.specfun.ConvergenceError` is raised.

    The stopping test is relative to ``max(1, |partial sum|)``, so the accuracy is absolute where the state
    is small: far in the tail, where ``|ψ| ≪ 1``, only a few leading digits are right even though the absolute
    error stays near ``tol``. Use :func:`cs_wavefunction_closed` where the relative accuracy of small values
    matters.

    >>> from ..gk_model import GKParams
    >>> lab = CSLabel(-0.3, 1.0, 0.2, GKParams.from_gamma(1.8, 0.5))
    >>> cs_wavefunction_series(lab, numpy.array([0.0, 0.5, 2.0])).shape
    (3,)
    """
    xx = _coordinates(xi)
    p = label.params
    damping = 2.0 * p.beta * label.epsilon
    m_max = min(SERIES_TERM_CAP, int(math.ceil((math.log(1.0 / tol) + 20.0) / damping)) + 50)
    coefficients = numpy.exp(-damping * numpy.arange(m_max + 1)) * mp_poly_normalized_table(m_max,
                                                                                          label.mp_params,
                                                                                          label.x)
    flat = xx.reshape(-1)
    table = basis_table(p, m_max, flat)
    out = numpy.empty(flat.shape, dtype=complex)
    for k in range(flat.size):
        # One extra term beyond the cap so that hitting the cap is reported as non-convergence.
        res = sum_series(coefficients * table[:, k], tol=tol, max_terms=m_max, ratio_window=_SERIES_RATIO_WINDOW,
                         floor=1.0, what=f'Coherent wavefunction series at ξ={flat[k]}')
        out[k] = res.value
    scale = math.exp(-label.epsilon * p.beta * p.gamma) / math.sqrt(normalization_series(label, tol=tol).real)
    out = (out * scale).reshape(xx.shape)
    _logger.debug('Series coherent wavefunction at %r on %d points with up to %d terms', label, out.size, m_max + 1)
    return complex(out) if numpy.ndim(xi) == 0 else out


def state_coefficients(label: CSLabel, m_max: int, tol: float = DEFAULT_COMPOSITE_TOLERANCE) -> numpy.ndarray:
    """
    The expansion coefficients ``⟨ψ_m|x,ε⟩ = N^{-1/2} e^{-β(2m+γ)ε} p̂_m(x)`` for ``m = 0 .. m_max``.
    Their squares sum to one as ``m_max → ∞``.

    >>> from ..gk_model import GKParams
    >>> c = state_coefficients(CSLabel(0.2, 1.2, 0.1, GKParams.from_gamma(2.5, 1.0)), 400)
    >>> bool(abs(float(numpy.sum(c ** 2)) - 1) < 1e-9)
    True
    """
    if m_max < 0:
        raise ValueError(f'Invalid coefficient count: {m_max}')
    p = label.params
    m = numpy.arange(m_max + 1)
    log_weight = -p.beta * (2.0 * m + p.gamma) * label.epsilon - 0.5 * math.log(normalization_closed(label, tol=tol))
    out: numpy.ndarray = numpy.exp(log_weight) * mp_poly_normalized_table(m_max, label.mp_params, label.x)
    return out


def _coordinates(xi: typing.Union[float, numpy.ndarray]) -> numpy.ndarray:
    xx = numpy.asarray(xi, dtype=float)
    if not numpy.all(numpy.isfinite(xx)) or not numpy.all(xx >= 0):
        raise DomainError(f'The coordinates must be finite and non-negative; got {xi!r}')
    return xx


def _unittest_wavefunction_routes() -> None:
    from pytest import approx
    from ..gk_model import GKParams

    xi = numpy.array([0.1, 0.5, 1.0, 1.7, 2.5, 3.5])
    for gamma, beta in ((2.5, 1.0), (1.8, 0.5)):
        p = GKParams.from_gamma(gamma, beta)
        for x, theta in ((0.0, math.pi / 2), (1.5, math.pi / 3), (-2.0, 2 * math.pi / 3)):
            lab = CSLabel(x, theta, 0.1 / beta, p)
            closed = cs_wavefunction_closed(lab, xi)
            series = cs_wavefunction_series(lab, xi)
            assert numpy.max(numpy.abs(closed - series)) < 1e-8 * max(1.0, float(numpy.max(numpy.abs(series))))
            assert numpy.max(numpy.abs(series.imag)) == 0

    # The closed state is normalized in L² over the half-line.
    from ..specfun import gauss_legendre_composite
    p = GKParams.from_gamma(2.5, 1.0)
    lab = CSLabel(0.7, math.pi / 2, 0.1, p)
    nodes, weights = gauss_legendre_composite(numpy.linspace(0.0, 10.0, 41), 24)
    psi = cs_wavefunction_closed(lab, nodes)
    assert float(numpy.sum(weights * numpy.abs(psi) ** 2)) == approx(1.0, abs=1e-6)

    # The same coefficients reproduce the series on a grid.
    coefficients = state_coefficients(lab, 600)
    direct = coefficients @ basis_table(p, 600, xi)
    assert direct == approx(cs_wavefunction_series(lab, xi).real, abs=1e-9)

    # In the tail the series is held to an absolute accuracy only.
    lab = CSLabel(0.5, math.pi / 2, 0.25, GKParams.from_gamma(2.5, 2.0))
    tail = numpy.array([3.0, 4.0, 5.0])
    closed = cs_wavefunction_closed(lab, tail)
    assert numpy.max(numpy.abs(closed - cs_wavefunction_series(lab, tail))) < 1e-8
    assert abs(closed[-1]) < 1e-3
