#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import typing
from ._base import Command as Command, SubsystemFactory as SubsystemFactory


def get_available_command_classes() -> typing.Sequence[typing.Type[Command]]:
    import pygkcs._cli
    # noinspection PyTypeChecker
    pygkcs.util.import_submodules(pygkcs._cli)
    # https://github.com/python/mypy/issues/5374
    return list(pygkcs.util.iter_descendants(Command))  # type: ignore
