#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import typing
import logging
import argparse
import numpy
import pygkcs
from . import _subsystems
from ._base import Command, SubsystemFactory
from ._util import parse_grid, run_config


_logger = logging.getLogger(__name__)


class MeasureCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['measure']

    @property
    def help(self) -> str:
        return '''
Tabulate the weight Upsilon(x) of the Meixner-Pollaczek polynomials, the
normalization N(x) and the measure density N(x) Upsilon(x) that resolves
the identity. The report checks the unit mass of Upsilon by quadrature over
the real line with cutoffs derived from its decay rates.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs measure --gamma 2.5 --theta 1.0 --x-grid=-10:10:81
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
            '--x-grid',
            default='-5:5:21',
            metavar='GRID',
            help='The labels x: start:stop:count or a comma-separated list. Default: %(default)s',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        params, quad, output = subsystems
        assert isinstance(params, _subsystems.parameters.ModelParameters)
        assert isinstance(quad, pygkcs.resolution.QuadratureSpec)
        assert isinstance(output, _subsystems.output.Output)
        gamma = params.require_model().gamma
        rows = []
        for x in parse_grid(args.x_grid):
            label = params.label(x)
            normalization = pygkcs.coherent.normalization_closed(label, tol=quad.tolerance)
            weight = pygkcs.coherent.upsilon(params.theta, gamma, x)
            rows.append({
                'x':             x,
                'upsilon':       weight,
                'normalization': normalization,
                'density':       normalization * weight,
            })

        nodes, weights, cutoffs = quad.real_line_rule(params.theta, 0.0)
        mass = float(numpy.sum(weights * pygkcs.coherent.upsilon(params.theta, gamma, nodes)))
        _logger.info('Weight mass over [%.3f, %.3f] from %d nodes: %r', -cutoffs[0], cutoffs[1], nodes.size, mass)
        report = pygkcs.verification.compare('unit mass of Upsilon', 'coherent', 'real-line quadrature', mass, 1.0,
                                             tolerance=max(quad.tolerance, 1e-12),
                                             detail=f'cutoffs={list(cutoffs)}')
        output.emit(run_config(args, self.names[0], params), rows, [report])
        return 0
