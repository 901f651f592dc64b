#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import typing
import argparse
import numpy
import pygkcs
from . import _subsystems
from ._base import Command, SubsystemFactory
from ._util import parse_grid, run_config


class EigenCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['eigen']

    @property
    def help(self) -> str:
        return '''
Tabulate the spectrum lambda_m = 2 beta (2m + gamma) and the normalized
eigenfunctions psi_m(xi) of the model for m = 0 .. M on a grid of coordinates.
The output has one row per (m, xi).
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs eigen --gamma 2.5 --m-max 3 --xi-grid 0:6:61
pygkcs eigen --rho 1 --kappa0 1 --xi-grid 0.5,1,2 -F json
'''.strip()

    @property
    def subsystem_factories(self) -> typing.Sequence[SubsystemFactory]:
        return [
            _subsystems.parameters.ParametersFactory(),
            _subsystems.output.OutputFactory(),
        ]

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--m-max',
            type=int,
            default=5,
            metavar='M',
            help='The highest index of the eigenfunctions. Default: %(default)s',
        )
        parser.add_argument(
            '--xi-grid',
            default='0:8:81',
            metavar='GRID',
            help='''
Non-negative coordinates: start:stop:count or a comma-separated list.
Default: %(default)s
'''.strip())

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        params, output = subsystems
        assert isinstance(params, _subsystems.parameters.ModelParameters)
        assert isinstance(output, _subsystems.output.Output)
        model = params.require_model()
        m_max = int(args.m_max)
        if m_max < 0:
            raise ValueError(f'Invalid --m-max: {m_max}')
        xi = numpy.array(parse_grid(args.xi_grid))
        table = pygkcs.gk_model.basis_table(model, m_max, xi)
        rows = [
            {
                'm':          m,
                'eigenvalue': pygkcs.gk_model.eigenvalue(model, m),
                'xi':         float(xi[k]),
                'psi':        float(table[m, k]),
            }
            for m in range(m_max + 1) for k in range(len(xi))
        ]
        output.emit(run_config(args, self.names[0], params), rows)
        return 0
