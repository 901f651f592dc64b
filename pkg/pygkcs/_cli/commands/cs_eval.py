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


class CSEvalCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['cs-eval']

    @property
    def help(self) -> str:
        return '''
Evaluate the wavefunction <xi|x, epsilon> of the coherent state on a grid of
coordinates by the closed form (confluent hypergeometric function) and by
the eigenfunction series, and report the real part, the imaginary part, and
the squared modulus of both, together with the modulus of their difference.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs cs-eval --gamma 2.5 --x 0.7 --theta 1.2 --xi-grid 0:5:51
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
            type=float,
            default=0.0,
            metavar='FLOAT',
            help='The real label x of the state. Default: %(default)s',
        )
        parser.add_argument(
            '--xi-grid',
            default='0:6:61',
            metavar='GRID',
            help='Non-negative coordinates: start:stop:count or a list. Default: %(default)s',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        params, quad, output = subsystems
        assert isinstance(params, _subsystems.parameters.ModelParameters)
        assert isinstance(quad, pygkcs.resolution.QuadratureSpec)
        assert isinstance(output, _subsystems.output.Output)
        label = params.label(float(args.x))
        xi = numpy.array(parse_grid(args.xi_grid))
        closed = pygkcs.coherent.cs_wavefunction_closed(label, xi, tol=quad.tolerance)
        series = pygkcs.coherent.cs_wavefunction_series(label, xi, tol=quad.tolerance)
        rows = [
            {
                'xi':           float(xi[k]),
                'closed_re':    float(closed[k].real),
                'closed_im':    float(closed[k].imag),
                'closed_abs2':  float(abs(closed[k]) ** 2),
                'series_re':    float(series[k].real),
                'series_im':    float(series[k].imag),
                'series_abs2':  float(abs(series[k]) ** 2),
                'difference':   float(abs(closed[k] - series[k])),
            }
            for k in range(len(xi))
        ]
        output.emit(run_config(args, self.names[0], params), rows)
        return 0
