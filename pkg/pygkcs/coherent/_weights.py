#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import logging
import threading
import numpy
from ..specfun import RepresentationOverflowError, log_pochhammer_ratio_table
from ..util import repr_attributes
from ._label import CSLabel


_LOG_DOUBLE_MAX = math.log(float(numpy.finfo(float).max))

_INITIAL_TABLE_SIZE = 64

_logger = logging.getLogger(__name__)


class CSWeights:
    """
    The positive sequence ``σ_ε(m) = (γ)_m / m! · e^{2β(2m+γ)ε}`` that weights the coherent-state coefficients.

    The values are materialized lazily in log space and memoized per instance; the table grows by doubling.
    Concurrent readers of the same instance are synchronized.

    >>> from ..gk_model import GKParams
    >>> w = CSWeights(CSLabel(0.0, 1.0, 0.1, GKParams.from_gamma(2.0, 1.0)))
    >>> round(w.sigma(1), 12) == round(2 * math.exp(0.8), 12)
    True
    >>> w
    CSWeights(gamma=2.0, beta=1.0, epsilon=0.1, materialized=64)
    """

    def __init__(self, label: CSLabel) -> None:
        self._gamma = label.params.gamma
        self._beta = label.params.beta
        self._epsilon = label.epsilon
        self._lock = threading.Lock()
        self._log_table = numpy.empty(0)
        self._ensure(_INITIAL_TABLE_SIZE - 1)

    def log_sigma(self, m: int) -> float:
        if m < 0:
            raise ValueError(f'Invalid weight index: {m}')
        self._ensure(m)
        return float(self._log_table[m])

    def sigma(self, m: int) -> float:
        value = self.log_sigma(m)
        if value > _LOG_DOUBLE_MAX:
            raise RepresentationOverflowError(f'sigma({m}) = exp({value}) is not representable as a double')
        return math.exp(value)

    def _ensure(self, m: int) -> None:
        with self._lock:
            if m < len(self._log_table):
                return
            size = max(_INITIAL_TABLE_SIZE, len(self._log_table))
            while size <= m:
                size *= 2
            index = numpy.arange(size, dtype=float)
            self._log_table = log_pochhammer_ratio_table(self._gamma, size - 1) \
                + 2.0 * self._beta * (2.0 * index + self._gamma) * self._epsilon
            _logger.debug('%r: log-weight table extended to %d entries', self, size)

    def __repr__(self) -> str:
        return repr_attributes(self, gamma=self._gamma, beta=self._beta, epsilon=self._epsilon,
                               materialized=len(self._log_table))


def sigma(label: CSLabel, m: int) -> float:
    """
    One-off evaluation of ``σ_ε(m)``; see :class:`CSWeights` for repeated use.

    >>> from ..gk_model import GKParams
    >>> label = CSLabel(0.3, 1.0, 0.05, GKParams.from_gamma(2.5, 2.0))
    >>> round(sigma(label, 0), 12) == round(math.exp(2 * 2.0 * 2.5 * 0.05), 12)
    True
    """
    return CSWeights(label).sigma(m)


def _unittest_weights() -> None:
    from pytest import approx, raises
    from ..gk_model import GKParams

    label = CSLabel(0.3, 1.0, 0.05, GKParams.from_gamma(2.5, 2.0))
    w = CSWeights(label)
    beta, gamma, eps = 2.0, 2.5, 0.05
    assert w.sigma(5) / w.sigma(4) == approx((gamma + 4) / 5 * math.exp(4 * beta * eps), rel=1e-13)
    assert w.log_sigma(1000) == approx(math.lgamma(gamma + 1000) - math.lgamma(gamma) - math.lgamma(1001)
                                       + 2 * beta * (2000 + gamma) * eps, rel=1e-12)
    assert w.log_sigma(3) == approx(math.log(w.sigma(3)))

    huge = CSWeights(label.with_x(0.0))
    with raises(RepresentationOverflowError):
        huge.sigma(2000)  # 2β·2m·ε = 800 > log(max double)
    with raises(ValueError):
        w.sigma(-1)
