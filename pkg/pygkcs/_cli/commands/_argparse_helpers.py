#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import enum
import typing
import argparse


class ArgumentParser(argparse.ArgumentParser):
    """
    Usage errors are validation errors, which the tool reports with the exit code 1 rather than argparse's 2;
    the exit code 2 is reserved for numerical failures.
    """

    def error(self, message: str) -> typing.NoReturn:
        self.print_usage()
        self.exit(1, f'{self.prog}: error: {message}\n')


def make_enum_action(enum_type: typing.Type[enum.Enum]) -> typing.Type[argparse.Action]:
    """
    An action that accepts the lower-case member names of the enumeration.

    >>> class Color(enum.Enum):
    ...     RED = enum.auto()
    ...     GREEN = enum.auto()
    >>> p = argparse.ArgumentParser()
    >>> _ = p.add_argument('--color', default=Color.RED, action=make_enum_action(Color))
    >>> p.parse_args(['--color', 'green']).color
    <Color.GREEN: 2>
    >>> p.parse_args([]).color
    <Color.RED: 1>
    """
    mapping: typing.Dict[str, typing.Any] = {e.name.lower(): e for e in enum_type}

    class ArgparseEnumAction(argparse.Action):
        # noinspection PyShadowingBuiltins
        def __init__(self,
                     option_strings: typing.Sequence[str],
                     dest:           str,
                     nargs:          typing.Union[int, str, None] = None,
                     const:          typing.Any = None,
                     default:        typing.Any = None,
                     type:           typing.Any = None,
                     choices:        typing.Any = None,
                     required:       bool = False,
                     help:           typing.Optional[str] = None,
                     metavar:        typing.Any = None):
            def type_proxy(x: str) -> typing.Any:
                """Also applied to string defaults, which is how the values from the configuration file arrive."""
                try:
                    return mapping[x.lower()]
                except LookupError:
                    raise argparse.ArgumentTypeError(f'expected one of {list(mapping)}; got {x!r}') from None

            if type is None:
                type = type_proxy

            if choices is None:
                choices = [_NamedChoice(key, value) for key, value in mapping.items()]

            super(ArgparseEnumAction, self).__init__(
                option_strings,
                dest,
                nargs=nargs,
                const=const,
                default=default,
                type=type,
                choices=choices,
                required=required,
                help=help,
                metavar=metavar,
            )

        def __call__(self,
                     parser:        argparse.ArgumentParser,
                     namespace:     argparse.Namespace,
                     values:        typing.Union[str, typing.Sequence[typing.Any], None],
                     option_string: typing.Optional[str] = None) -> None:
            setattr(namespace, self.dest, values)

    return ArgparseEnumAction


class _NamedChoice:
    def __init__(self, key: str, value: typing.Any):
        self.key = key
        self.value = value

    def __eq__(self, other: object) -> bool:
        return bool(self.value == other)

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return self.key
