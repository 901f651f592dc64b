#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The resolution of the identity by the coherent states and its numerical verification:
the quadrature rules over the label line and the half-line, the orthogonality of the coefficient polynomials,
the regularized identity operator ``O_ε`` with its integral kernel, and the ``ε → 0`` experiment.
"""

from ._quadrature import Scheme as Scheme
from ._quadrature import QuadratureSpec as QuadratureSpec
from ._quadrature import QuadratureTailError as QuadratureTailError
from ._quadrature import decay_rates as decay_rates

from ._orthogonality import orthogonality_integral as orthogonality_integral
from ._orthogonality import orthogonality_matrix as orthogonality_matrix
from ._orthogonality import orthogonality_expected as orthogonality_expected

from ._kernel import bilinear_kernel_series as bilinear_kernel_series
from ._kernel import bilinear_kernel_closed as bilinear_kernel_closed

from ._test_functions import TestFunction as TestFunction
from ._test_functions import EigenCombination as EigenCombination
from ._test_functions import SmoothBump as SmoothBump
from ._test_functions import Indicator as Indicator

from ._operator import default_truncation as default_truncation
from ._operator import apply_O_epsilon as apply_O_epsilon
from ._operator import apply_O_epsilon_kernel as apply_O_epsilon_kernel
from ._operator import laguerre_poisson_integral as laguerre_poisson_integral

from ._experiment import ConvergenceTrace as ConvergenceTrace
from ._experiment import poisson_limit_experiment as poisson_limit_experiment
from ._experiment import jump_values as jump_values
