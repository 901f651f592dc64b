#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import logging
import dataclasses
import contextlib
from ..specfun import NumericalError


Number = typing.Union[float, complex]

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """
    The outcome of checking one invariant at one point of the parameter grid.

    >>> r = compare('gamma(5) = 24', 'specfun', 'factorial', 24.000000000001, 24.0, tolerance=1e-12)
    >>> r.passed, r.abs_error < 2e-12
    (True, True)
    >>> r.to_builtin()['invariant']
    'gamma(5) = 24'
    """

    invariant: str
    """
    Human-readable statement of what is being checked.
    """

    module: str
    """
    The subpackage the invariant belongs to; also the name of the suite that produced the report.
    """

    reference: str
    """
    What the value is compared against: a closed form, an independent route, an analytic constant.
    """

    value: Number

    expected: Number

    abs_error: float

    rel_error: float
    """
    ``abs_error / max(|value|, |expected|, floor)``. For inequality checks, the excess over the bound.
    """

    tolerance: float

    passed: bool

    detail: str = ''

    identity: str = ''
    """
    The mathematical result the invariant is taken from, named by what it states.
    """

    def __post_init__(self) -> None:
        if not self.tolerance >= 0:
            raise ValueError(f'Invalid tolerance: {self.tolerance}')
        if not self.invariant or not self.module:
            raise ValueError('The invariant and the module shall be named')

    def to_builtin(self) -> typing.Dict[str, typing.Any]:
        """
        A flat mapping of built-in types for the output formatters. Complex numbers become ``[re, im]`` pairs.
        """
        out = dataclasses.asdict(self)
        for key in ('value', 'expected'):
            if isinstance(out[key], complex):
                out[key] = [out[key].real, out[key].imag]
        return out

    def __str__(self) -> str:
        verdict = 'PASS' if self.passed else 'FAIL'
        detail = f' ({self.detail})' if self.detail else ''
        identity = f' [{self.identity}]' if self.identity else ''
        return f'{verdict} [{self.module}] {self.invariant}{identity} vs {self.reference}: ' \
            f'rel_error={self.rel_error:.3g} tolerance={self.tolerance:.3g}{detail}'


def compare(invariant: str,
            module:    str,
            reference: str,
            value:     Number,
            expected:  Number,
            tolerance: float,
            floor:     float = 0.0,
            detail:    str = '',
            identity:  str = '') -> VerificationReport:
    """
    Equality check with the relative error taken against ``max(|value|, |expected|, floor)``.
    The floor turns the check into an absolute one for quantities that may vanish.
    Non-finite values never pass.

    >>> compare('zero', 'specfun', 'constant', 1e-14, 0.0, tolerance=1e-12).passed
    False
    >>> compare('zero', 'specfun', 'constant', 1e-14, 0.0, tolerance=1e-12, floor=1.0).passed
    True
    """
    abs_error = abs(complex(value) - complex(expected))
    scale = max(abs(value), abs(expected), floor)
    rel_error = abs_error / scale if scale > 0 else 0.0
    passed = math.isfinite(abs_error) and rel_error <= tolerance
    return VerificationReport(invariant=invariant,
                              module=module,
                              reference=reference,
                              value=_narrow(value),
                              expected=_narrow(expected),
                              abs_error=float(abs_error),
                              rel_error=float(rel_error),
                              tolerance=float(tolerance),
                              passed=bool(passed),
                              detail=detail,
                              identity=identity)


def at_most(invariant: str,
            module:    str,
            reference: str,
            value:     float,
            limit:     float,
            detail:    str = '',
            identity:  str = '') -> VerificationReport:
    """
    Inequality check ``value ≤ limit``. The errors report the excess over the limit, zero when it holds.

    >>> at_most('residual', 'gk_model', 'finite differences', 3e-5, 1e-4).passed
    True
    """
    excess = max(0.0, float(value) - float(limit)) if math.isfinite(value) else math.inf
    return VerificationReport(invariant=invariant,
                              module=module,
                              reference=reference,
                              value=float(value),
                              expected=float(limit),
                              abs_error=excess,
                              rel_error=excess / abs(limit) if limit != 0 else excess,
                              tolerance=0.0,
                              passed=excess == 0.0,
                              detail=detail,
                              identity=identity)


def failure(invariant: str, module: str, reference: str, ex: Exception, identity: str = '') -> VerificationReport:
    return VerificationReport(invariant=invariant,
                              module=module,
                              reference=reference,
                              value=math.nan,
                              expected=math.nan,
                              abs_error=math.inf,
                              rel_error=math.inf,
                              tolerance=0.0,
                              passed=False,
                              detail=f'{type(ex).__name__}: {ex}',
                              identity=identity)


class ReportCollector:
    """
    Accumulates the reports of one suite. A numerical exception raised inside :meth:`case`
    is converted into a failing report so that the rest of the suite still runs.
    The identity named by the enclosing case is attached to every report made inside it.
    """

    def __init__(self, module: str) -> None:
        self._module = module
        self._identity = ''
        self._reports: typing.List[VerificationReport] = []

    @property
    def reports(self) -> typing.List[VerificationReport]:
        return list(self._reports)

    @contextlib.contextmanager
    def case(self, invariant: str, reference: str, identity: str = '') -> typing.Iterator[None]:
        self._identity = identity
        try:
            yield
        except NumericalError as ex:
            _logger.warning('%s: %r vs %r raised %r', self._module, invariant, reference, ex)
            self._reports.append(failure(invariant, self._module, reference, ex, identity=identity))
        finally:
            self._identity = ''

    def compare(self,
                invariant: str,
                reference: str,
                value:     Number,
                expected:  Number,
                tolerance: float,
                floor:     float = 0.0,
                detail:    str = '') -> VerificationReport:
        r = compare(invariant, self._module, reference, value, expected, tolerance,
                    floor=floor, detail=detail, identity=self._identity)
        self._add(r)
        return r

    def at_most(self,
                invariant: str,
                reference: str,
                value:     float,
                limit:     float,
                detail:    str = '') -> VerificationReport:
        r = at_most(invariant, self._module, reference, value, limit, detail=detail, identity=self._identity)
        self._add(r)
        return r

    def _add(self, r: VerificationReport) -> None:
        (_logger.debug if r.passed else _logger.warning)('%s', r)
        self._reports.append(r)


def _narrow(x: Number) -> Number:
    c = complex(x)
    return c.real if c.imag == 0 else c


def _unittest_collector() -> None:
    from ..specfun import ConvergenceError

    c = ReportCollector('specfun')
    with c.case('converges', 'cap'):
        c.compare('converges', 'cap', 1.0, 1.0, tolerance=0.0)
        raise ConvergenceError('cap reached')
    with c.case('unreached', 'nothing'):
        c.at_most('unreached', 'nothing', 2.0, 1.0)
    reports = c.reports
    assert [r.passed for r in reports] == [True, False, False]
    assert reports[1].detail.startswith('ConvergenceError')
    assert math.isinf(reports[1].rel_error)
    assert reports[2].abs_error == 1.0

    r = compare('complex', 'coherent', 'conjugate', 1 + 1j, 1 - 1j, tolerance=1e-9)
    assert not r.passed
    assert r.to_builtin()['value'] == [1.0, 1.0]
    assert not compare('nan', 'coherent', 'nan', math.nan, 1.0, tolerance=1.0).passed


def _unittest_identity_attribution() -> None:
    from ..specfun import DomainError

    c = ReportCollector('coherent')
    with c.case('normalization', 'series', 'closed form of the normalization function'):
        c.compare('N(0)', 'series', 1.0, 1.1, tolerance=1e-9)
    with c.case('weight', 'analytic', 'coherent-state weights'):
        raise DomainError('out of range')
    with c.case('bare', 'nothing'):
        c.at_most('bare', 'nothing', 0.0, 1.0)
    failed, raised, bare = c.reports
    assert failed.identity == 'closed form of the normalization function'
    assert '[closed form of the normalization function]' in str(failed)
    assert str(failed).startswith('FAIL [coherent] N(0)')
    assert raised.identity == 'coherent-state weights' and not raised.passed
    assert bare.identity == '' and '[' not in str(bare).split(']', 1)[1]
    assert failed.to_builtin()['identity'] == 'closed form of the normalization function'
