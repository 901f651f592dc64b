#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from ._main import main as main

# noinspection PyCompatibility
from . import commands as commands
