#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import logging
import dataclasses
import numpy
from ._quadrature import QuadratureSpec
from ._operator import apply_O_epsilon
from ._test_functions import TestFunction, Indicator


_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ConvergenceTrace:
    """
    The relative ``L²`` errors ``‖O_ε φ - φ‖ / ‖φ‖`` along a ladder of regularization parameters.

    >>> t = ConvergenceTrace.from_errors([0.1, 0.05], [0.5, 0.26])
    >>> round(t.rates[0], 6), t.strictly_decreasing
    (1.923077, True)
    >>> ConvergenceTrace.from_errors([0.1], [0.5, 0.2])
    Traceback (most recent call last):
    ...
    ValueError: ...
    >>> ConvergenceTrace.from_errors([0.05, 0.1], [0.3, 0.5])
    Traceback (most recent call last):
    ...
    ValueError: ...
    """

    epsilons: typing.Tuple[float, ...]
    """
    The regularization parameters: positive and strictly decreasing.
    """

    errors: typing.Tuple[float, ...]

    rates: typing.Tuple[float, ...]
    """
    Ratios of successive errors, ``errors[k] / errors[k+1]``.
    """

    orders: typing.Tuple[float, ...]
    """
    Observed convergence orders, ``log(errors[k] / errors[k+1]) / log(epsilons[k] / epsilons[k+1])``.
    """

    def __post_init__(self) -> None:
        if len(self.epsilons) != len(self.errors) or not self.epsilons:
            raise ValueError(f'Mismatched trace: {len(self.epsilons)} epsilons, {len(self.errors)} errors')
        n = len(self.epsilons) - 1
        if len(self.rates) != n or len(self.orders) != n:
            raise ValueError('There shall be one rate and one order per adjacent pair of ladder entries')
        _check_ladder(self.epsilons)

    @staticmethod
    def from_errors(epsilons: typing.Sequence[float], errors: typing.Sequence[float]) -> ConvergenceTrace:
        eps = tuple(float(x) for x in epsilons)
        err = tuple(float(x) for x in errors)
        if len(eps) != len(err):
            raise ValueError(f'Mismatched trace: {len(eps)} epsilons, {len(err)} errors')
        pairs = list(zip(zip(eps, eps[1:]), zip(err, err[1:])))
        rates = tuple(a / b if b > 0 else math.inf for _, (a, b) in pairs)
        orders = tuple(math.log(a / b) / math.log(ea / eb) if a > 0 and b > 0 and ea != eb else math.nan
                       for (ea, eb), (a, b) in pairs)
        return ConvergenceTrace(epsilons=eps, errors=err, rates=rates, orders=orders)

    @property
    def strictly_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.errors, self.errors[1:]))

    def linear_constant(self) -> float:
        """
        The mean of ``error / ε``; for finite-rank inputs the error is asymptotically linear in ``ε``.
        """
        return float(numpy.mean(numpy.array(self.errors) / numpy.array(self.epsilons)))

    def check_linear(self, slack: float = 0.2) -> bool:
        """
        True if every ``error / ε`` is within ``slack`` (relative) of :meth:`linear_constant`.
        """
        c = self.linear_constant()
        return all(abs(err / eps - c) <= slack * c for eps, err in zip(self.epsilons, self.errors))


def poisson_limit_experiment(gamma:      float,
                             beta:       float,
                             phi:        TestFunction,
                             eps_ladder: typing.Sequence[float],
                             quad:       QuadratureSpec = QuadratureSpec(),
                             theta:      float = 0.5 * math.pi) -> ConvergenceTrace:
    """
    Applies ``O_ε`` along the ladder, in the given order, and measures the relative ``L²`` error on a fixed
    composite Gauss-Legendre grid over ``[0, half_line_cutoff]`` whose panels do not straddle the breakpoints
    of ``φ``.

    >>> from ._test_functions import EigenCombination
    >>> from ..gk_model import GKParams
    >>> phi = EigenCombination([1.0], GKParams.from_gamma(2.5, 1.0))
    >>> t = poisson_limit_experiment(2.5, 1.0, phi, [0.1])
    >>> bool(abs(t.errors[0] - (1 - math.exp(-0.5))) < 1e-9)
    True
    """
    _check_ladder(eps_ladder)
    nodes, weights = quad.half_line_rule(phi.breakpoints)
    target = phi(nodes)
    norm = math.sqrt(phi.norm_squared)
    errors = []
    for eps in eps_ladder:
        image = apply_O_epsilon(theta, gamma, beta, eps, phi, nodes, quad=quad)
        err = math.sqrt(float(weights @ (image - target) ** 2)) / norm
        _logger.info('Poisson limit for %r: epsilon=%r error=%.6g', phi, eps, err)
        errors.append(err)
    return ConvergenceTrace.from_errors(eps_ladder, errors)


def _check_ladder(ladder: typing.Sequence[float]) -> None:
    if not ladder:
        raise ValueError('The ladder is empty')
    if not all(e > 0 for e in ladder) or not all(b < a for a, b in zip(ladder, ladder[1:])):
        raise ValueError(f'The ladder shall be positive and strictly decreasing: {list(ladder)}')


def jump_values(gamma:     float,
                beta:      float,
                indicator: Indicator,
                epsilon:   float,
                quad:      QuadratureSpec = QuadratureSpec(),
                theta:     float = 0.5 * math.pi) -> typing.Tuple[float, float]:
    """
    ``O_ε`` of an indicator at its two jump points. Both tend to the midpoint ½ as ``ε → 0``,
    not to the value of the indicator there: the identity is resolved almost everywhere only.
    """
    lo, hi = indicator.jumps
    out = apply_O_epsilon(theta, gamma, beta, epsilon, indicator, numpy.array([lo, hi]), quad=quad)
    return float(out[0]), float(out[1])


def _unittest_finite_rank_trace() -> None:
    from pytest import approx
    from ._test_functions import EigenCombination
    from ..gk_model import GKParams

    phi = EigenCombination([1.0, 1.0], GKParams.from_gamma(2.5, 1.0))
    ladder = [0.1, 0.05, 0.02, 0.01]
    trace = poisson_limit_experiment(2.5, 1.0, phi, ladder)
    assert trace.strictly_decreasing
    assert [e / eps for e, eps in zip(trace.errors, ladder)] == approx([5.035, 6.004, 6.726, 6.995], abs=2e-3)
    assert trace.check_linear(0.2)
    assert not trace.check_linear(0.05)

    halving = poisson_limit_experiment(2.5, 1.0, phi, [0.02, 0.01, 0.005])
    assert halving.rates == approx((1.923, 1.961), abs=2e-3)
    assert all(o == approx(1.0, abs=0.1) for o in halving.orders)


def _unittest_ladder_validation() -> None:
    from pytest import raises
    from ._test_functions import EigenCombination
    from ..gk_model import GKParams

    phi = EigenCombination([1.0], GKParams.from_gamma(2.5, 1.0))
    for bad in ([0.01, 0.1], [0.1, 0.1], [0.1, 0.0], []):
        with raises(ValueError):
            poisson_limit_experiment(2.5, 1.0, phi, bad)
    with raises(ValueError):
        ConvergenceTrace(epsilons=(0.05, 0.1), errors=(0.3, 0.5), rates=(0.6,), orders=(0.7,))
    with raises(ValueError):
        ConvergenceTrace.from_errors([0.1, 0.1], [0.5, 0.4])
