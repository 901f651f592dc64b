#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Numerical orthogonality of the Meixner-Pollaczek polynomials with respect to the normalized weight
:func:`pygkcs.coherent.upsilon`. The expected Gram matrix is ``diag((γ)_m / m!)``.
"""

from __future__ import annotations
import math
import logging
import numpy
from ..specfun import MPPolyParams, mp_poly_normalized_table, log_pochhammer_ratio_table
from ..coherent import upsilon
from ._quadrature import QuadratureSpec, decay_rates, tail_estimate, certify_tail


_logger = logging.getLogger(__name__)


def orthogonality_integral(m:     int,
                           j:     int,
                           gamma: float,
                           theta: float,
                           quad:  QuadratureSpec = QuadratureSpec()) -> float:
    """
    ``I_mj = ∫ Υ(x) P_m^{(γ/2)}(x; θ) P_j^{(γ/2)}(x; θ) dx`` over the real line.

    >>> round(orthogonality_integral(3, 3, 2.5, math.pi / 2), 7)
    6.5625
    >>> bool(abs(orthogonality_integral(2, 5, 1.8, math.pi / 3)) < 1e-7)
    True
    """
    if m < 0 or j < 0:
        raise ValueError(f'Invalid polynomial indices: {m}, {j}')
    return float(orthogonality_matrix(max(m, j), gamma, theta, quad)[m, j])


def orthogonality_matrix(m_max: int,
                         gamma: float,
                         theta: float,
                         quad:  QuadratureSpec = QuadratureSpec()) -> numpy.ndarray:
    """
    The matrix ``I_mj`` for ``m, j = 0 .. m_max`` by one quadrature rule; the truncation of the real line is
    certified from the integrand envelope at both cutoffs.
    Raises :class:`QuadratureTailError` if the certificate fails.
    """
    if m_max < 0:
        raise ValueError(f'Invalid matrix size: {m_max}')
    degree = gamma - 1.0 + 2.0 * m_max
    nodes, weights, (left, right) = quad.real_line_rule(theta, degree)
    p = MPPolyParams(0.5 * gamma, theta)
    scale = numpy.exp(0.5 * log_pochhammer_ratio_table(gamma, m_max))
    table = mp_poly_normalized_table(m_max, p, nodes) * scale[:, None]
    out: numpy.ndarray = (table * (weights * upsilon(theta, gamma, nodes))) @ table.T

    edges = numpy.array([-left, right])
    envelope = upsilon(theta, gamma, edges) * numpy.max(numpy.abs(mp_poly_normalized_table(m_max, p, edges))
                                                        * scale[:, None], axis=0) ** 2
    left_rate, right_rate = decay_rates(theta)
    tail = tail_estimate(envelope[0], left_rate, degree, left) + tail_estimate(envelope[1], right_rate, degree, right)
    certify_tail(tail, float(numpy.max(numpy.abs(numpy.diag(out)))), quad.tolerance,
                 f'MP orthogonality matrix up to {m_max} (gamma={gamma}, theta={theta})')
    _logger.debug('MP orthogonality matrix up to %d on [%.2f, %.2f]: tail %.3g', m_max, -left, right, tail)
    return out


def orthogonality_expected(m_max: int, gamma: float) -> numpy.ndarray:
    """
    ``diag((γ)_m / m!)``.

    >>> orthogonality_expected(2, 2.0).tolist()
    [[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 3.0]]
    """
    return numpy.diag(numpy.round(numpy.exp(log_pochhammer_ratio_table(gamma, m_max)), 14))


def _unittest_orthogonality() -> None:
    from pytest import raises
    from ._quadrature import QuadratureTailError

    for gamma in (1.8, 2.5):
        for theta in (math.pi / 3, math.pi / 2, 2 * math.pi / 3):
            got = orthogonality_matrix(12, gamma, theta)
            expected = orthogonality_expected(12, gamma)
            norm = numpy.sqrt(numpy.outer(numpy.diag(expected), numpy.diag(expected)))
            assert float(numpy.max(numpy.abs(got - expected) / norm)) < 1e-6

    with raises(QuadratureTailError):
        orthogonality_matrix(6, 2.5, math.pi / 2, QuadratureSpec(real_line_cutoffs=(2.0, 2.0)))
    with raises(ValueError):
        orthogonality_integral(-1, 0, 2.5, 1.0)
