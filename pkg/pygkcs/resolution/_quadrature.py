#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import enum
import math
import typing
import logging
import dataclasses
import numpy
from ..specfun import NumericalError, gauss_legendre_composite, panel_breakpoints, tanh_sinh_rule


_CUTOFF_ITERATIONS = 8

_CUTOFF_MARGIN = 10.0

_logger = logging.getLogger(__name__)


class QuadratureTailError(NumericalError):
    """
    The estimated contribution of the integrand beyond the integration cutoffs exceeds the tolerance.
    """
    pass


class Scheme(enum.Enum):
    GAUSS_LEGENDRE_COMPOSITE = enum.auto()
    """
    Gauss-Legendre nodes on every panel. Preferred for smooth integrands.
    """

    TANH_SINH = enum.auto()
    """
    Double-exponential nodes on every panel. Tolerates endpoint singularities.
    """


@dataclasses.dataclass(frozen=True)
class QuadratureSpec:
    """
    How integrals over the half-line (the coordinate ``ξ``) and over the real line (the label ``x``)
    are discretized. The integration intervals are split into panels no wider than :attr:`panel_width`,
    and every panel receives :attr:`n_nodes` nodes of the chosen :attr:`scheme`.

    >>> q = QuadratureSpec()
    >>> q.scheme, q.n_nodes, q.half_line_cutoff
    (<Scheme.GAUSS_LEGENDRE_COMPOSITE: 1>, 32, 12.0)
    >>> nodes, weights = q.rule([0.0, 2.0])
    >>> round(float(weights @ nodes ** 5), 10)
    10.6666666667
    >>> QuadratureSpec(n_nodes=8)
    Traceback (most recent call last):
    ...
    ValueError: ...
    """

    n_nodes: int = 32

    half_line_cutoff: float = 12.0
    """
    Half-line integrals are truncated at this coordinate.
    """

    real_line_cutoffs: typing.Optional[typing.Tuple[float, float]] = None
    """
    The distances ``(left, right)`` from the origin at which real-line integrals are truncated.
    If not given, they are derived from the decay of the integrand; see :meth:`real_line_cutoffs_for`.
    """

    scheme: Scheme = Scheme.GAUSS_LEGENDRE_COMPOSITE

    panel_width: float = 1.0

    tolerance: float = 1e-8

    def __post_init__(self) -> None:
        if self.n_nodes < 16:
            raise ValueError(f'At least 16 nodes per panel are required; got {self.n_nodes}')
        if not self.half_line_cutoff > 0:
            raise ValueError(f'Invalid half-line cutoff: {self.half_line_cutoff}')
        if self.real_line_cutoffs is not None:
            left, right = self.real_line_cutoffs
            if not left > 0 or not right > 0:
                raise ValueError(f'Invalid real-line cutoffs: {self.real_line_cutoffs}')
        if not self.panel_width > 0:
            raise ValueError(f'Invalid panel width: {self.panel_width}')
        if not self.tolerance > 0:
            raise ValueError(f'Invalid tolerance: {self.tolerance}')

    def rule(self,
             breakpoints: typing.Sequence[float],
             panel_width: typing.Optional[float] = None) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
        """
        Nodes and weights on ``[min(breakpoints), max(breakpoints)]``; no panel straddles a breakpoint.
        The panel width may be narrowed per call, e.g. to resolve oscillations.
        """
        width = self.panel_width if panel_width is None else min(self.panel_width, panel_width)
        bp = sorted(set(float(x) for x in breakpoints))
        if len(bp) < 2:
            raise ValueError(f'At least two distinct breakpoints are needed; got {breakpoints!r}')
        edges = numpy.unique(numpy.concatenate([panel_breakpoints(lo, hi, width) for lo, hi in zip(bp, bp[1:])]))
        if self.scheme == Scheme.GAUSS_LEGENDRE_COMPOSITE:
            return gauss_legendre_composite(edges, self.n_nodes)

        ref_x, ref_w = tanh_sinh_rule(self.n_nodes | 1)
        half = 0.5 * numpy.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        nodes = (mid[:, None] + half[:, None] * ref_x[None, :]).ravel()
        weights = (half[:, None] * ref_w[None, :]).ravel()
        return nodes, weights

    def half_line_rule(self,
                       breakpoints: typing.Sequence[float] = (),
                       panel_width: typing.Optional[float] = None) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
        """
        A rule on ``[0, half_line_cutoff]`` that respects the given interior breakpoints.

        >>> nodes, weights = QuadratureSpec(half_line_cutoff=3.0).half_line_rule([1.5])
        >>> round(float(weights.sum()), 12), bool(numpy.all((nodes > 0) & (nodes < 3)))
        (3.0, True)
        """
        inner = [x for x in breakpoints if 0 < x < self.half_line_cutoff]
        return self.rule([0.0, *inner, self.half_line_cutoff], panel_width)

    def real_line_cutoffs_for(self, theta: float, degree: float) -> typing.Tuple[float, float]:
        """
        Cutoffs at which an integrand decaying like ``|x|^degree e^{-rate·|x|}`` falls below the tolerance,
        with the rates of :func:`decay_rates`. Explicit :attr:`real_line_cutoffs` take precedence.

        >>> left, right = QuadratureSpec().real_line_cutoffs_for(math.pi / 3, 4.0)
        >>> left > right > 0
        True
        """
        if self.real_line_cutoffs is not None:
            return self.real_line_cutoffs
        return tuple(_solve_cutoff(rate, degree, self.tolerance) for rate in decay_rates(theta))  # type: ignore

    def real_line_rule(self,
                       theta:  float,
                       degree: float) -> typing.Tuple[numpy.ndarray, numpy.ndarray, typing.Tuple[float, float]]:
        """
        Nodes, weights and the cutoffs ``(left, right)`` used for an integral over the real line.
        """
        left, right = self.real_line_cutoffs_for(theta, degree)
        nodes, weights = self.rule([-left, 0.0, right])
        _logger.debug('Real-line rule for theta=%r degree=%r: [%.3f, %.3f] with %d nodes',
                      theta, degree, -left, right, nodes.size)
        return nodes, weights, (left, right)


def decay_rates(theta: float) -> typing.Tuple[float, float]:
    """
    The exponential decay rates ``(left, right)`` of the Meixner-Pollaczek weight:
    ``e^{-2θ|x|}`` as ``x → -∞`` and ``e^{-(2π-2θ)x}`` as ``x → +∞``.

    >>> decay_rates(math.pi / 2) == (math.pi, math.pi)
    True
    """
    if not 0 < theta < math.pi:
        raise ValueError(f'The MP angle must be in (0, pi); got {theta}')
    return 2.0 * theta, 2.0 * math.pi - 2.0 * theta


def tail_estimate(envelope: float, rate: float, degree: float, cutoff: float) -> float:
    """
    ``∫_L^∞ |x|^d e^{-r|x|} dx`` relative to the integrand at the cutoff ``L``, scaled by the observed
    envelope: ``|f(L)| / (r - d/L)``. Infinite if the integrand is still growing at the cutoff.

    >>> round(tail_estimate(1.0, 2.0, 0.0, 5.0), 12)
    0.5
    >>> tail_estimate(1.0, 1.0, 10.0, 5.0)
    inf
    """
    slope = rate - max(0.0, degree) / cutoff
    if slope <= 0:
        return math.inf
    return abs(envelope) / slope


def certify_tail(tail: float, scale: float, tolerance: float, what: str) -> None:
    """
    Raises :class:`QuadratureTailError` if ``tail > tolerance · max(1, scale)``.
    """
    if tail > tolerance * max(1.0, abs(scale)):
        _logger.warning('%s: the truncated tail %.3g exceeds the tolerance %.3g', what, tail, tolerance)
        raise QuadratureTailError(f'{what}: the truncated tail {tail:.3g} exceeds the tolerance {tolerance:.3g}')


def _solve_cutoff(rate: float, degree: float, tolerance: float) -> float:
    target = math.log(1.0 / tolerance) + _CUTOFF_MARGIN
    cutoff = target / rate
    for _ in range(_CUTOFF_ITERATIONS):
        cutoff = (target + max(0.0, degree) * math.log(max(cutoff, 1.0))) / rate
    return cutoff


def _unittest_quadrature_spec() -> None:
    from pytest import approx, raises

    for scheme in Scheme:
        q = QuadratureSpec(scheme=scheme, panel_width=0.5)
        nodes, weights = q.rule([0.0, 1.0, 2.5])
        assert float(weights @ numpy.exp(nodes)) == approx(math.exp(2.5) - 1.0, rel=1e-10)
        nodes, weights = q.rule([0.0, 1.0])
        assert float(weights @ numpy.sqrt(nodes)) == approx(2.0 / 3.0, rel=1e-4)

    q = QuadratureSpec(tolerance=1e-10)
    left, right = q.real_line_cutoffs_for(math.pi / 4, 20.0)
    assert left * math.pi / 2 > math.log(1e10) + 20.0 * math.log(left)
    assert right * 1.5 * math.pi > math.log(1e10) + 20.0 * math.log(right)
    assert QuadratureSpec(real_line_cutoffs=(3.0, 4.0)).real_line_cutoffs_for(1.0, 5.0) == (3.0, 4.0)

    with raises(QuadratureTailError):
        certify_tail(1e-3, 1.0, 1e-6, 'test integral')
    certify_tail(1e-7, 2.0, 1e-6, 'test integral')

    with raises(ValueError):
        QuadratureSpec(real_line_cutoffs=(1.0, 0.0))
    with raises(ValueError):
        QuadratureSpec(panel_width=0)
    with raises(ValueError):
        QuadratureSpec(tolerance=-1.0)
    with raises(ValueError):
        decay_rates(math.pi)
