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


class MPPolyCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['mp-poly']

    @property
    def help(self) -> str:
        return '''
Evaluate the Meixner-Pollaczek polynomials P_m(x; theta) for m = 0 .. M by the
three-term recurrence and by the terminating hypergeometric representation,
and report both together with their difference. The parameter lambda is
gamma/2 unless given explicitly with --lam.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs mp-poly --gamma 2.5 --theta 1.0 --m-max 10 --x-grid=-5:5:21
pygkcs mp-poly --lam 0.75 --x-grid 0,0.5
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
            '--m-max',
            type=int,
            default=10,
            metavar='M',
            help='The highest degree. Default: %(default)s',
        )
        parser.add_argument(
            '--x-grid',
            default='-5:5:21',
            metavar='GRID',
            help='Points x: start:stop:count or a comma-separated list. Default: %(default)s',
        )
        parser.add_argument(
            '--lam',
            type=float,
            metavar='FLOAT',
            help='The parameter lambda > 0. Default: gamma/2 of the model.',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        params, quad, output = subsystems
        assert isinstance(params, _subsystems.parameters.ModelParameters)
        assert isinstance(quad, pygkcs.resolution.QuadratureSpec)
        assert isinstance(output, _subsystems.output.Output)
        lam = float(args.lam) if args.lam is not None else 0.5 * params.require_model().gamma
        p = pygkcs.specfun.MPPolyParams(lam, params.theta)
        m_max = int(args.m_max)
        if m_max < 0:
            raise ValueError(f'Invalid --m-max: {m_max}')
        rows = []
        for m in range(m_max + 1):
            for x in parse_grid(args.x_grid):
                recurrence = pygkcs.specfun.mp_poly(m, p, x)
                hypergeometric = pygkcs.specfun.mp_poly_hyp(m, p, x, tol=quad.tolerance)
                rows.append({
                    'm':              m,
                    'x':              x,
                    'recurrence':     recurrence,
                    'hypergeometric': hypergeometric,
                    'difference':     abs(recurrence - hypergeometric),
                })
        config = run_config(args, self.names[0], params)
        config['lam'] = lam
        output.emit(config, rows)
        return 0
