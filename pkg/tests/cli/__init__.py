#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#
