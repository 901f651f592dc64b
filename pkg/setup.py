#!/usr/bin/env python3
#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import setuptools
setuptools.setup()
