#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Small helpers shared across the library and the command-line tool.
"""

from ._introspect import import_submodules as import_submodules
from ._introspect import iter_descendants as iter_descendants

from ._repr import repr_attributes as repr_attributes
