#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from ._base import SubsystemFactory as SubsystemFactory

from . import parameters as parameters
from . import quadrature as quadrature
from . import output as output
