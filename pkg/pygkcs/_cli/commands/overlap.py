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


class OverlapCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['overlap']

    @property
    def help(self) -> str:
        return '''
Build the Hermitian matrix of the overlaps <x_i, epsilon|x_j, epsilon> of the
coherent states with the given labels. One row per matrix element. The
report states whether the matrix is positive semi-definite.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs overlap --gamma 1.8 --theta 2.0944 --x=-3,-1.2,0,0.9,2.5 -F yaml
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
            default='-1,0,1',
            metavar='GRID',
            help='The labels x: start:stop:count or a comma-separated list. Default: %(default)s',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        params, quad, output = subsystems
        assert isinstance(params, _subsystems.parameters.ModelParameters)
        assert isinstance(quad, pygkcs.resolution.QuadratureSpec)
        assert isinstance(output, _subsystems.output.Output)
        xs = parse_grid(args.x)
        g = pygkcs.coherent.overlap_matrix([params.label(x) for x in xs], tol=quad.tolerance)
        rows = [
            {
                'i':   i,
                'j':   j,
                'x_i': xs[i],
                'x_j': xs[j],
                're':  float(g[i, j].real),
                'im':  float(g[i, j].imag),
                'abs': float(abs(g[i, j])),
            }
            for i in range(len(xs)) for j in range(len(xs))
        ]
        report = pygkcs.verification.at_most('-min eigenvalue of the overlap matrix', 'coherent', 'eigenvalues',
                                             -float(numpy.min(numpy.linalg.eigvalsh(g))), 1e-8)
        output.emit(run_config(args, self.names[0], params), rows, [report])
        return 0
