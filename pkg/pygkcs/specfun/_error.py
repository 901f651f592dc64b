#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing

if typing.TYPE_CHECKING:  # pragma: no cover
    from ._series import SeriesEval


class NumericalError(RuntimeError):
    """
    This is the root exception class for all numerical failures raised by the library.
    Exception types defined in the higher-level subpackages (coherent states, resolution of the identity)
    also inherit from this type, so the application may use it as the single base type to catch.
    """
    pass


class DomainError(NumericalError, ValueError):
    """
    An argument lies outside of the domain supported by the function; e.g., a non-positive real part
    passed to the log-gamma function, or a hypergeometric argument the evaluator does not cover.
    Inherits :class:`ValueError` as well because in most contexts this is an invalid input.
    """
    pass


class ConvergenceError(NumericalError):
    """
    An infinite series or an iterative procedure hit its hard cap before the requested tolerance
    could be certified. The partial result is attached for diagnostics.
    """

    def __init__(self, message: str, partial: typing.Optional[SeriesEval] = None) -> None:
        super(ConvergenceError, self).__init__(message)
        self.partial = partial


class RepresentationOverflowError(NumericalError):
    """
    A quantity computed in log space cannot be represented as a double-precision number.
    """
    pass


class IdentityViolationError(NumericalError):
    """
    A quantity that is real by construction came out with an imaginary residue above the tolerance.
    This usually means that a closed form was evaluated on the wrong branch or with a wrong factor.
    """
    pass
