#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import typing
import argparse
import pygkcs
from . import _subsystems
from ._base import Command, SubsystemFactory
from ._util import parse_grid, run_config


class CSNormCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['cs-norm']

    @property
    def help(self) -> str:
        return '''
Evaluate the normalization function N(x) of the coherent states by the closed
form and by the bilinear series, for each of the given labels x.

With --literal the closed form omits the factor (1 - mu)^(-2ix); the result is
then real at x = 0 only and the run fails with a numerical error elsewhere.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs cs-norm --gamma 2.5 --epsilon 0.1 --x=-2:2:9
pygkcs cs-norm --gamma 2.5 --x 0 --literal
'''.strip()

    @property
    def subsystem_factories(self) -> typing.Sequence[SubsystemFactory]:
        return [
            _subsystems.parameters.ParametersFactory(),
            _subsystems.quadrature.QuadratureFactory(),
            _subsystems.output.OutputFactory(),
        ]

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--x',
            default='0',
            metavar='GRID',
            help='The labels x: start:stop:count or a comma-separated list. Default: %(default)s',
        )
        parser.add_argument(
            '--literal',
            action='store_true',
            help='Evaluate the closed form without the (1 - mu)^(-2ix) factor.',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        params, quad, output = subsystems
        assert isinstance(params, _subsystems.parameters.ModelParameters)
        assert isinstance(quad, pygkcs.resolution.QuadratureSpec)
        assert isinstance(output, _subsystems.output.Output)
        rows = []
        for x in parse_grid(args.x):
            label = params.label(x)
            closed = pygkcs.coherent.normalization_closed(label, literal=bool(args.literal), tol=quad.tolerance)
            series = pygkcs.coherent.normalization_series(label, tol=quad.tolerance)
            rows.append({
                'x':              x,
                'closed':         closed,
                'series':         series.real,
                'series_terms':   series.terms_used,
                'rel_difference': abs(closed - series.real) / max(abs(closed), abs(series.real)),
            })
        output.emit(run_config(args, self.names[0], params), rows)
        return 0
