#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import logging
import functools
import numpy
from ._series import SeriesEval, DEFAULT_TOLERANCE, DEFAULT_MAX_TERMS


_MAX_TANH_SINH_LEVELS = 12

_logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _leggauss(n_nodes: int) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    nodes, weights = numpy.polynomial.legendre.leggauss(n_nodes)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre_composite(breakpoints: typing.Sequence[float],
                             n_nodes:     int) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Composite Gauss-Legendre rule: ``n_nodes`` nodes on every panel between adjacent breakpoints.
    The breakpoints shall be strictly increasing. Returns the nodes and the weights as flat arrays.

    >>> x, w = gauss_legendre_composite([0.0, 1.0, 3.0], 8)
    >>> x.shape, round(float(w.sum()), 12), round(float(w @ x ** 3), 12)
    ((16,), 3.0, 20.25)
    """
    bp = numpy.asarray(breakpoints, dtype=float)
    if bp.ndim != 1 or len(bp) < 2:
        raise ValueError(f'At least two breakpoints are needed; got {breakpoints!r}')
    if not numpy.all(numpy.diff(bp) > 0):
        raise ValueError(f'The breakpoints shall be strictly increasing: {breakpoints!r}')
    if n_nodes < 1:
        raise ValueError(f'Invalid number of nodes per panel: {n_nodes}')
    ref_x, ref_w = _leggauss(n_nodes)
    half = 0.5 * numpy.diff(bp)
    mid = 0.5 * (bp[1:] + bp[:-1])
    nodes = (mid[:, None] + half[:, None] * ref_x[None, :]).ravel()
    weights = (half[:, None] * ref_w[None, :]).ravel()
    return nodes, weights


def panel_breakpoints(lo: float, hi: float, panel_width: float) -> numpy.ndarray:
    """
    Splits ``[lo, hi]`` into equal panels no wider than ``panel_width``.

    >>> panel_breakpoints(0.0, 1.0, 0.3).tolist()
    [0.0, 0.25, 0.5, 0.75, 1.0]
    """
    if not hi > lo or not panel_width > 0:
        raise ValueError(f'Invalid panel layout: [{lo}, {hi}] by {panel_width}')
    count = max(1, int(math.ceil((hi - lo) / panel_width)))
    return numpy.linspace(lo, hi, count + 1)


def tanh_sinh_rule(n_nodes: int, s_max: float = 3.0) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Double-exponential rule on ``[-1, 1]`` with ``n_nodes`` equally spaced abscissas in ``s ∈ [-s_max, s_max]``.
    Suitable for integrands with endpoint singularities.

    >>> x, w = tanh_sinh_rule(61)
    >>> round(float(w.sum()), 10), round(float(w @ numpy.sqrt(1 - x * x)), 9) == round(math.pi / 2, 9)
    (2.0, True)
    """
    if n_nodes < 3 or n_nodes % 2 == 0:
        raise ValueError(f'The tanh-sinh rule needs an odd number of nodes, at least 3; got {n_nodes}')
    s, h = numpy.linspace(-s_max, s_max, n_nodes, retstep=True)
    arg = 0.5 * math.pi * numpy.sinh(s)
    nodes = numpy.tanh(arg)
    weights = h * 0.5 * math.pi * numpy.cosh(s) / numpy.cosh(arg) ** 2
    return nodes, weights


def tanh_sinh_unit_interval(log_integrand:   typing.Callable[[numpy.ndarray, numpy.ndarray, numpy.ndarray],
                                                             numpy.ndarray],
                            s_max:           float,
                            tol:             float = DEFAULT_TOLERANCE,
                            max_evaluations: int = DEFAULT_MAX_TERMS,
                            what:            str = 'tanh-sinh quadrature') -> SeriesEval:
    """
    Adaptive tanh-sinh quadrature of ``∫₀¹ f(t) dt`` for integrands that are best expressed in log space.
    The callable receives ``(t, log t, log(1 - t))`` evaluated without cancellation near both endpoints
    and returns the complex logarithm of ``f``. The step is halved until two successive estimates agree
    to ``tol``; the difference is reported as the tail bound, the number of integrand evaluations as the
    number of terms. Refinement stops before the total number of evaluations would exceed
    ``max_evaluations``.

    >>> res = tanh_sinh_unit_interval(lambda t, lt, l1t: -0.5 * lt + 0j, s_max=4.0)
    >>> round(res.real, 10), res.converged
    (2.0, True)
    """
    if not s_max > 0:
        raise ValueError(f'Invalid abscissa range: {s_max}')
    h = 0.5
    previous: typing.Optional[complex] = None
    evaluations = 0
    estimate = 0j
    difference = math.inf
    for level in range(_MAX_TANH_SINH_LEVELS):
        count = int(math.ceil(s_max / h))
        if evaluations + 2 * count + 1 > max_evaluations:
            break
        s = numpy.arange(-count, count + 1) * h
        w = 0.5 * math.pi * numpy.sinh(s)
        log_t = -numpy.logaddexp(0.0, -2.0 * w)
        log_1mt = -numpy.logaddexp(0.0, 2.0 * w)
        t = numpy.exp(log_t)
        log_f = log_integrand(t, log_t, log_1mt) + numpy.log(math.pi * numpy.cosh(s)) + log_t + log_1mt
        estimate = complex(h * numpy.sum(numpy.exp(log_f)))
        evaluations += len(s)
        if previous is not None:
            difference = abs(estimate - previous)
            if difference <= tol * max(1.0, abs(estimate)):
                _logger.debug('%s converged at level %d with %d evaluations; value %r, error %.3g',
                              what, level, evaluations, estimate, difference)
                return SeriesEval(estimate, evaluations, difference, True, tol)
        previous = estimate
        h *= 0.5

    _logger.warning('%s did not converge after %d evaluations; last difference %.3g',
                    what, evaluations, difference)
    return SeriesEval(estimate, evaluations, difference, False, tol)


def _unittest_gauss_legendre_composite() -> None:
    from pytest import approx, raises

    x, w = gauss_legendre_composite(panel_breakpoints(0.0, math.pi, 0.5), 16)
    assert float(w @ numpy.sin(x)) == approx(2.0, rel=1e-14)

    # Integrable endpoint singularity: composite GL converges slowly, tanh-sinh does not care.
    res = tanh_sinh_unit_interval(lambda t, lt, l1t: -0.5 * lt - 0.5 * l1t + 0j, s_max=5.0, tol=1e-12)
    assert res.converged
    assert res.real == approx(math.pi, rel=1e-11)

    with raises(ValueError):
        gauss_legendre_composite([0.0], 8)
    with raises(ValueError):
        gauss_legendre_composite([0.0, 0.0, 1.0], 8)
    with raises(ValueError):
        gauss_legendre_composite([0.0, 1.0], 0)
    with raises(ValueError):
        tanh_sinh_rule(4)
    with raises(ValueError):
        panel_breakpoints(1.0, 0.0, 0.1)
