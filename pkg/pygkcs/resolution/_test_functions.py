#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The fixed suite of functions on the half-line that the resolution of the identity is exercised on:
a finite combination of eigenfunctions (for which ``O_ε`` is known exactly), a smooth compactly supported bump,
and an indicator with two jumps.
"""

from __future__ import annotations
import abc
import math
import typing
import functools
import numpy
from ..specfun import gauss_legendre_composite
from ..gk_model import GKParams, basis_table
from ..util import repr_attributes


_BUMP_NORM_PANELS = 64

_BUMP_NORM_NODES = 32


class TestFunction(abc.ABC):
    """
    A real function on the half-line with known support breakpoints and ``L²`` norm.
    """

    @abc.abstractmethod
    def __call__(self, xi: numpy.ndarray) -> numpy.ndarray:
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def breakpoints(self) -> typing.Sequence[float]:
        """
        The points where the function or its derivatives are not smooth, including the support ends.
        Quadrature panels shall not straddle them.
        """
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def norm_squared(self) -> float:
        raise NotImplementedError

    @property
    def support(self) -> typing.Tuple[float, float]:
        return min(self.breakpoints), max(self.breakpoints)

    def __repr__(self) -> str:
        return repr_attributes(self, breakpoints=list(self.breakpoints))


class EigenCombination(TestFunction):
    """
    ``φ = Σ_n c_n ψ_n``. Its image under ``O_ε`` is ``Σ_n e^{-2β(2n+γ)ε} c_n ψ_n``, see :meth:`apply_exact`.

    >>> phi = EigenCombination([1.0, 1.0], GKParams.from_gamma(2.5, 1.0))
    >>> phi.norm_squared
    2.0
    >>> phi.breakpoints[0], phi.breakpoints[1] > 5
    (0.0, True)
    """

    def __init__(self, coefficients: typing.Sequence[float], params: GKParams) -> None:
        self._coefficients = numpy.array(coefficients, dtype=float)
        if self._coefficients.ndim != 1 or len(self._coefficients) == 0:
            raise ValueError(f'Invalid coefficients: {coefficients!r}')
        self._params = params
        # Beyond this coordinate every basis function in the combination is below e^{-40}.
        degree = len(self._coefficients) - 1
        self._cutoff = math.sqrt((4.0 * degree + 2.0 * params.gamma + 80.0) / params.beta)

    @property
    def coefficients(self) -> numpy.ndarray:
        return self._coefficients.copy()

    @property
    def params(self) -> GKParams:
        return self._params

    def __call__(self, xi: numpy.ndarray) -> numpy.ndarray:
        out: numpy.ndarray = self._coefficients @ basis_table(self._params, len(self._coefficients) - 1, xi)
        return out

    def apply_exact(self, epsilon: float, xi: numpy.ndarray) -> numpy.ndarray:
        p = self._params
        n = numpy.arange(len(self._coefficients))
        damped = numpy.exp(-2.0 * p.beta * (2.0 * n + p.gamma) * epsilon) * self._coefficients
        out: numpy.ndarray = damped @ basis_table(p, len(self._coefficients) - 1, xi)
        return out

    @property
    def breakpoints(self) -> typing.Sequence[float]:
        return 0.0, self._cutoff

    @property
    def norm_squared(self) -> float:
        return float(self._coefficients @ self._coefficients)


class SmoothBump(TestFunction):
    """
    ``exp(-1 / ((ξ - lo)(hi - ξ)))`` on ``(lo, hi)``, zero elsewhere: infinitely differentiable.

    >>> phi = SmoothBump()
    >>> phi.support, abs(float(phi(numpy.array([1.5]))[0]) - math.exp(-4.0)) < 1e-16
    ((1.0, 2.0), True)
    """

    def __init__(self, lo: float = 1.0, hi: float = 2.0) -> None:
        if not 0 <= lo < hi:
            raise ValueError(f'Invalid bump support: [{lo}, {hi}]')
        self._lo, self._hi = float(lo), float(hi)

    def __call__(self, xi: numpy.ndarray) -> numpy.ndarray:
        xx = numpy.asarray(xi, dtype=float)
        inside = (xx > self._lo) & (xx < self._hi)
        span = numpy.where(inside, (xx - self._lo) * (self._hi - xx), 1.0)
        out: numpy.ndarray = numpy.where(inside, numpy.exp(-1.0 / span), 0.0)
        return out

    @property
    def breakpoints(self) -> typing.Sequence[float]:
        return self._lo, self._hi

    @functools.cached_property
    def norm_squared(self) -> float:  # type: ignore
        nodes, weights = gauss_legendre_composite(numpy.linspace(self._lo, self._hi, _BUMP_NORM_PANELS + 1),
                                                  _BUMP_NORM_NODES)
        return float(weights @ self(nodes) ** 2)


class Indicator(TestFunction):
    """
    The indicator of ``[lo, hi]``. ``O_ε`` converges to it in ``L²`` and at every point except the jumps,
    where the limit is the midpoint ½.

    >>> phi = Indicator(1.0, 2.0)
    >>> phi(numpy.array([0.5, 1.5, 2.5])).tolist(), phi.norm_squared
    ([0.0, 1.0, 0.0], 1.0)
    """

    def __init__(self, lo: float = 1.0, hi: float = 2.0) -> None:
        if not 0 <= lo < hi:
            raise ValueError(f'Invalid indicator support: [{lo}, {hi}]')
        self._lo, self._hi = float(lo), float(hi)

    def __call__(self, xi: numpy.ndarray) -> numpy.ndarray:
        xx = numpy.asarray(xi, dtype=float)
        out: numpy.ndarray = ((xx >= self._lo) & (xx <= self._hi)).astype(float)
        return out

    @property
    def breakpoints(self) -> typing.Sequence[float]:
        return self._lo, self._hi

    @property
    def norm_squared(self) -> float:
        return self._hi - self._lo

    @property
    def jumps(self) -> typing.Tuple[float, float]:
        return self._lo, self._hi


def _unittest_test_functions() -> None:
    from pytest import approx, raises
    from ..specfun import gauss_legendre_composite as rule

    p = GKParams.from_gamma(1.8, 0.5)
    phi = EigenCombination([0.3, -1.0, 0.0, 2.0], p)
    nodes, weights = rule(numpy.linspace(*phi.support, 121), 24)
    assert float(weights @ phi(nodes) ** 2) == approx(phi.norm_squared, rel=1e-10)
    assert phi.apply_exact(1e-12, nodes) == approx(phi(nodes), abs=1e-9)

    bump = SmoothBump(1.0, 2.0)
    assert 0.8e-4 < bump.norm_squared < 1.1e-4
    assert bump(numpy.array([1.0, 2.0])).tolist() == [0.0, 0.0]

    with raises(ValueError):
        SmoothBump(2.0, 1.0)
    with raises(ValueError):
        Indicator(-1.0, 1.0)
    with raises(ValueError):
        EigenCombination([], p)
