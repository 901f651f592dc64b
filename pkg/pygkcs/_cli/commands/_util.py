#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import enum
import typing
import logging
import argparse
import numpy


GridSpec = typing.Union[str, float, typing.Sequence[float]]

_NON_CONFIG_ARGUMENTS = {'func', 'command_name', 'verbose', 'config', 'out', 'format'}

_logger = logging.getLogger(__name__)


def parse_grid(spec: GridSpec) -> typing.Tuple[float, ...]:
    """
    Parses a grid specification: either ``start:stop:count`` (inclusive, evenly spaced) or a comma-separated list.
    Sequences and single numbers, which may come from the configuration file, are accepted as well.

    >>> parse_grid('0:1:5')
    (0.0, 0.25, 0.5, 0.75, 1.0)
    >>> parse_grid('-1.5, 0, 2')
    (-1.5, 0.0, 2.0)
    >>> parse_grid([1, 2.5]), parse_grid(3)
    ((1.0, 2.5), (3.0,))
    >>> parse_grid('0:1:0')
    Traceback (most recent call last):
    ...
    ValueError: ...
    """
    if isinstance(spec, (int, float)):
        return (float(spec),)
    if not isinstance(spec, str):
        out = tuple(float(x) for x in spec)
    elif ':' in spec:
        try:
            start, stop, count = spec.split(':')
            n = int(count)
            lo, hi = float(start), float(stop)
        except ValueError:
            raise ValueError(f'Malformed grid {spec!r}; expected start:stop:count') from None
        if n < 1:
            raise ValueError(f'The grid {spec!r} shall have at least one point')
        out = tuple(float(x) for x in numpy.linspace(lo, hi, n))
    else:
        try:
            out = tuple(float(x) for x in spec.split(',') if x.strip())
        except ValueError:
            raise ValueError(f'Malformed list {spec!r}; expected comma-separated numbers') from None
    if not out:
        raise ValueError(f'The grid {spec!r} is empty')
    if not all(numpy.isfinite(out)):
        raise ValueError(f'The grid {spec!r} contains non-finite values')
    return out


def run_config(args: argparse.Namespace, command: str, *subsystems: object) -> typing.Dict[str, typing.Any]:
    """
    The effective configuration of the run as built-in types: the command name, the arguments after
    the configuration file and the command line have been merged, and the products of the subsystems
    that can describe themselves. Output-only options are excluded so that the document does not depend
    on where it is written.
    """
    arguments: typing.Dict[str, typing.Any] = {}
    for key, value in sorted(vars(args).items()):
        if key in _NON_CONFIG_ARGUMENTS:
            continue
        if isinstance(value, enum.Enum):
            value = value.name.lower()
        elif isinstance(value, (list, tuple)):
            value = list(value)
        arguments[key] = value
    out: typing.Dict[str, typing.Any] = {'command': command, 'arguments': arguments}
    for ss in subsystems:
        to_builtin = getattr(ss, 'to_builtin', None)
        if callable(to_builtin):
            out['model'] = to_builtin()
    return out


def _unittest_run_config() -> None:
    ns = argparse.Namespace(func=print, verbose=2, config=None, out='x.csv', x_grid='0:1:3', beta=1.0, suite=('a',))
    assert run_config(ns, 'measure') == {
        'command': 'measure',
        'arguments': {'beta': 1.0, 'suite': ['a'], 'x_grid': '0:1:3'},
    }
