#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Special functions of complex parameters: the gamma family, the confluent and Gauss hypergeometric
functions, the Laguerre and Meixner-Pollaczek polynomials and their generating identities.

Infinite sums return :class:`SeriesEval` instances which carry the number of terms used and
the estimated tail, so that every higher-level result can be traced back to its truncation.
The quadrature rules used by the rest of the library live here as well.

All failures are reported through the exception hierarchy rooted at :class:`NumericalError`.
"""

from ._error import NumericalError as NumericalError
from ._error import DomainError as DomainError
from ._error import ConvergenceError as ConvergenceError
from ._error import RepresentationOverflowError as RepresentationOverflowError
from ._error import IdentityViolationError as IdentityViolationError

from ._series import SeriesEval as SeriesEval
from ._series import sum_series as sum_series
from ._series import DEFAULT_TOLERANCE as DEFAULT_TOLERANCE
from ._series import DEFAULT_COMPOSITE_TOLERANCE as DEFAULT_COMPOSITE_TOLERANCE
from ._series import DEFAULT_MAX_TERMS as DEFAULT_MAX_TERMS

from ._gamma import pochhammer as pochhammer
from ._gamma import log_gamma as log_gamma
from ._gamma import gamma as gamma
from ._gamma import abs_gamma_sq as abs_gamma_sq
from ._gamma import log_pochhammer_ratio_table as log_pochhammer_ratio_table

from ._quadrature_rules import gauss_legendre_composite as gauss_legendre_composite
from ._quadrature_rules import panel_breakpoints as panel_breakpoints
from ._quadrature_rules import tanh_sinh_rule as tanh_sinh_rule
from ._quadrature_rules import tanh_sinh_unit_interval as tanh_sinh_unit_interval

from ._hypergeometric import hyp1f1 as hyp1f1
from ._hypergeometric import hyp2f1 as hyp2f1

from ._orthopoly import MPPolyParams as MPPolyParams
from ._orthopoly import laguerre as laguerre
from ._orthopoly import mp_poly as mp_poly
from ._orthopoly import mp_poly_hyp as mp_poly_hyp
from ._orthopoly import mp_poly_hyp_cancellation_scale as mp_poly_hyp_cancellation_scale
from ._orthopoly import mp_poly_normalized_table as mp_poly_normalized_table
from ._orthopoly import orthonormal_laguerre_table as orthonormal_laguerre_table

from ._generating import mp_bilinear_closed as mp_bilinear_closed
from ._generating import mp_bilinear_series as mp_bilinear_series
from ._generating import laguerre_gen_closed as laguerre_gen_closed
from ._generating import laguerre_gen_series as laguerre_gen_series
