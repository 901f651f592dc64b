#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import logging
import itertools
import collections
import dataclasses
from ._error import ConvergenceError


DEFAULT_TOLERANCE = 1e-12
"""
Default relative tolerance for the special functions.
"""

DEFAULT_COMPOSITE_TOLERANCE = 1e-10
"""
Default relative tolerance for the composite identities (generating functions, normalization, states).
"""

DEFAULT_MAX_TERMS = 10_000
"""
Hard cap on the number of terms of any infinite series unless overridden per call.
"""

_SMALL_RUN_LENGTH = 3

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SeriesEval:
    """
    Outcome of an infinite summation (or of a quadrature rule viewed as one).

    >>> SeriesEval(1.5 + 0j, 3, 0.0, True)
    SeriesEval(value=(1.5+0j), terms_used=3, tail_bound=0.0, converged=True, tolerance=1e-12)
    >>> SeriesEval(1.0, 3, 1.0, True)
    Traceback (most recent call last):
    ...
    ValueError: ...
    """

    value: complex

    terms_used: int
    """
    Number of terms that were actually added; never exceeds the hard cap of the evaluation.
    """

    tail_bound: float
    """
    Estimated magnitude of the neglected tail. Zero for terminating sums.
    """

    converged: bool

    tolerance: float = DEFAULT_TOLERANCE
    """
    The tolerance the evaluation was requested with.
    """

    def __post_init__(self) -> None:
        object.__setattr__(self, 'value', complex(self.value))
        if self.terms_used < 0:
            raise ValueError(f'Invalid number of terms: {self.terms_used}')
        if not self.tail_bound >= 0:
            raise ValueError(f'Invalid tail bound: {self.tail_bound}')
        if not self.tolerance > 0:
            raise ValueError(f'Invalid tolerance: {self.tolerance}')
        if self.converged and self.tail_bound > self.tolerance * max(1.0, abs(self.value)):
            raise ValueError(f'A converged evaluation cannot have the tail bound {self.tail_bound} '
                             f'above the tolerance {self.tolerance}')

    @property
    def real(self) -> float:
        return self.value.real

    def scaled(self, factor: complex) -> SeriesEval:
        """
        The same evaluation multiplied by a constant; the tail bound scales with the factor's magnitude.
        The factor shall not exceed one in magnitude if the evaluation is converged, otherwise the
        tolerance invariant may break.
        """
        return SeriesEval(value=self.value * factor,
                          terms_used=self.terms_used,
                          tail_bound=self.tail_bound * abs(factor),
                          converged=self.converged,
                          tolerance=self.tolerance)


def sum_series(terms:            typing.Iterable[complex],
               tol:              float = DEFAULT_TOLERANCE,
               max_terms:        int = DEFAULT_MAX_TERMS,
               ratio_window:     int = 1,
               floor:            float = 0.0,
               raise_on_failure: bool = True,
               what:             str = 'series') -> SeriesEval:
    """
    Adds up the terms until three consecutive terms are below ``tol`` relative to the partial sum and the
    geometric tail estimate ``|term| / (1 - r)`` is below ``tol * max(1, |sum|)``.
    The ratio ``r`` is estimated over the last ``ratio_window`` terms using the magnitude envelope,
    which tolerates oscillating terms and isolated zeros.
    A positive ``floor`` makes the term test absolute below that magnitude, for sums that may vanish.

    Finite iterables that end before the cap are treated as exact sums.

    >>> round(sum_series(0.5 ** n for n in range(1000)).real, 9)
    2.0
    >>> sum_series([1, 2, 3]).tail_bound
    0.0
    >>> sum_series((1.0 for _ in itertools.count()), max_terms=10)
    Traceback (most recent call last):
    ...
    pygkcs.specfun._error.ConvergenceError: ...
    """
    if not tol > 0:
        raise ValueError(f'Invalid tolerance: {tol}')
    if max_terms < 1:
        raise ValueError(f'Invalid term cap: {max_terms}')
    if ratio_window < 1:
        raise ValueError(f'Invalid ratio window: {ratio_window}')
    if not floor >= 0:
        raise ValueError(f'Invalid floor: {floor}')

    history: typing.Deque[float] = collections.deque(maxlen=ratio_window + 1)
    total = 0j
    small_run = 0
    tail = math.inf
    iterator = iter(terms)
    count = 0
    for term in itertools.islice(iterator, max_terms):
        count += 1
        total += term
        magnitude = abs(term)
        history.append(magnitude)
        small_run = small_run + 1 if magnitude <= tol * max(abs(total), floor) else 0
        if small_run >= _SMALL_RUN_LENGTH:
            tail = _estimate_geometric_tail(history)
            if tail <= tol * max(1.0, abs(total)):
                _logger.debug('%s converged after %d terms; value %r, tail %.3g', what, count, total, tail)
                return SeriesEval(total, count, tail, True, tol)

    if count < max_terms or next(iterator, None) is None:
        _logger.debug('%s terminated after %d terms; value %r', what, count, total)
        return SeriesEval(total, count, 0.0, True, tol)

    partial = SeriesEval(total, count, tail if math.isfinite(tail) else math.inf, False, tol)
    _logger.warning('%s did not converge in %d terms: %r', what, count, partial)
    if raise_on_failure:
        raise ConvergenceError(f'{what} did not converge in {count} terms (tolerance {tol})', partial)
    return partial


def _estimate_geometric_tail(history: typing.Sequence[float]) -> float:
    mags = list(history)
    if len(mags) < 2:
        return math.inf
    half = len(mags) // 2
    older = max(mags[:half]) if half > 0 else mags[0]
    recent = max(mags[half:])
    span = len(mags) - half if len(mags) > 2 else 1
    if recent == 0.0:
        return 0.0
    if older == 0.0:
        return math.inf
    ratio = (recent / older) ** (1.0 / span)
    if ratio >= 1.0:
        return math.inf
    return recent / (1.0 - ratio)


def _unittest_sum_series() -> None:
    from pytest import raises, approx

    # Exponential series: the tail estimate is a genuine upper bound here.
    res = sum_series((1.0 / math.factorial(n) for n in itertools.count()), tol=1e-15, max_terms=100)
    assert res.converged
    assert res.value.real == approx(math.e, rel=1e-15)
    assert res.terms_used < 30

    # Terminating sums never raise, even if they end exactly at the cap.
    res = sum_series([1.0, 1.0, 1.0], max_terms=3)
    assert res.converged and res.value == 3 and res.terms_used == 3

    # Isolated zeros do not cause premature termination.
    res = sum_series(((0.5 ** n) * (n % 2) for n in range(200)), tol=1e-14)
    assert res.value.real == approx(2.0 / 3.0, rel=1e-13)

    # Slowly decaying terms are detected as non-convergent.
    with raises(ConvergenceError) as ex:
        sum_series((1.0 / (n + 1) for n in itertools.count()), max_terms=500)
    assert ex.value.partial is not None
    assert not ex.value.partial.converged
    assert ex.value.partial.terms_used == 500

    res = sum_series((1.0 / (n + 1) for n in itertools.count()), max_terms=500, raise_on_failure=False)
    assert not res.converged

    with raises(ValueError):
        sum_series([], tol=0)
    with raises(ValueError):
        sum_series([], max_terms=0)
    with raises(ValueError):
        sum_series([], ratio_window=0)

    assert SeriesEval(3.0, 1, 0.0, True).scaled(-0.5).value == -1.5
