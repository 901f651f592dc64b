#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

if __name__ == '__main__':
    from pygkcs import _cli
    _cli.main()
