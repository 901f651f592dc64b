#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Self-verification of the library. Every identity the other subpackages rely on is checked here against
an independent route and reported as a :class:`VerificationReport`; the ``verify`` command of the CLI
is a thin wrapper over :func:`run_suites`.
"""

from ._report import VerificationReport as VerificationReport
from ._report import ReportCollector as ReportCollector
from ._report import compare as compare
from ._report import at_most as at_most

from ._suites import SUITES as SUITES
from ._suites import run_suites as run_suites
from ._suites import specfun_suite as specfun_suite
from ._suites import gk_model_suite as gk_model_suite
from ._suites import coherent_suite as coherent_suite
from ._suites import resolution_suite as resolution_suite
from ._suites import SuiteOptions as SuiteOptions
from ._suites import DEFAULT_EPS_LADDER as DEFAULT_EPS_LADDER
