#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import logging
import argparse
import dataclasses
import pygkcs
from ._base import SubsystemFactory


_DEFAULT_BETA = 1.0

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ModelParameters:
    model: typing.Optional[pygkcs.gk_model.GKParams]
    """
    None if no parameter group was given; commands that need the model call :meth:`require_model`.
    """

    theta: float

    epsilon: float

    def require_model(self) -> pygkcs.gk_model.GKParams:
        if self.model is None:
            raise ValueError('The model is not specified; use one of: --gamma, --alpha, --rho with --kappa0')
        return self.model

    def label(self, x: float) -> pygkcs.coherent.CSLabel:
        return pygkcs.coherent.CSLabel(x, self.theta, self.epsilon, self.require_model())

    def to_builtin(self) -> typing.Dict[str, typing.Any]:
        out: typing.Dict[str, typing.Any] = {'theta': self.theta, 'epsilon': self.epsilon}
        if self.model is not None:
            out.update(dataclasses.asdict(self.model))
        return out


class ParametersFactory(SubsystemFactory):
    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--beta',
            type=float,
            metavar='FLOAT',
            help=f'''
The oscillator parameter beta > 0. Not allowed together with --rho/--kappa0,
which determine it. Default: {_DEFAULT_BETA}
'''.strip())
        parser.add_argument(
            '--gamma',
            type=float,
            metavar='FLOAT',
            help='''
The index gamma > 1 of the model; alpha = ((2 (gamma - 1))^2 - 1) / 4.
'''.strip())
        parser.add_argument(
            '--alpha',
            type=float,
            metavar='FLOAT',
            help='''
The barrier strength alpha > -1/4 of the reduced Hamiltonian
-d^2/dxi^2 + beta^2 xi^2 + alpha / xi^2.
'''.strip())
        parser.add_argument(
            '--rho',
            type=float,
            metavar='FLOAT',
            help='''
The depth of the physical potential rho (xi/kappa0 - kappa0/xi)^2; requires --kappa0.
'''.strip())
        parser.add_argument(
            '--kappa0',
            type=float,
            metavar='FLOAT',
            help='''
The equilibrium position of the physical potential; requires --rho.
'''.strip())
        parser.add_argument(
            '--theta',
            type=float,
            default=0.5 * math.pi,
            metavar='FLOAT',
            help='''
The angle of the Meixner-Pollaczek polynomials, in (0, pi). Default: pi/2
'''.strip())
        parser.add_argument(
            '--epsilon',
            type=float,
            default=0.1,
            metavar='FLOAT',
            help='''
The regularization parameter epsilon > 0. Default: %(default)s
'''.strip())

    def construct_subsystem(self, args: argparse.Namespace) -> ModelParameters:
        groups = {
            'gamma': args.gamma is not None,
            'alpha': args.alpha is not None,
            'rho/kappa0': args.rho is not None or args.kappa0 is not None,
        }
        given = [name for name, present in groups.items() if present]
        if len(given) > 1:
            raise ValueError(f'Exactly one parameter group is allowed; got: {", ".join(given)}')

        model: typing.Optional[pygkcs.gk_model.GKParams] = None
        beta = args.beta if args.beta is not None else _DEFAULT_BETA
        if args.gamma is not None:
            model = pygkcs.gk_model.GKParams.from_gamma(args.gamma, beta)
        elif args.alpha is not None:
            model = pygkcs.gk_model.GKParams.from_reduced(args.alpha, beta)
        elif given:
            if args.rho is None or args.kappa0 is None:
                raise ValueError('--rho and --kappa0 shall be given together')
            if args.beta is not None:
                raise ValueError('--beta is determined by --rho and --kappa0 and cannot be given with them')
            model = pygkcs.gk_model.GKParams.from_physical(args.rho, args.kappa0)

        if not 0 < args.theta < math.pi:
            raise ValueError(f'The angle shall be in (0, pi); got {args.theta}')
        if not args.epsilon > 0:
            raise ValueError(f'Invalid epsilon: {args.epsilon}')
        out = ModelParameters(model=model, theta=float(args.theta), epsilon=float(args.epsilon))
        _logger.debug('Constructed %r', out)
        return out


def _unittest_parameters() -> None:
    import pytest

    def construct(**kwargs: typing.Any) -> ModelParameters:
        ns = dict(beta=None, gamma=None, alpha=None, rho=None, kappa0=None, theta=1.0, epsilon=0.1)
        ns.update(kwargs)
        return ParametersFactory().construct_subsystem(argparse.Namespace(**ns))

    assert construct().model is None
    assert construct(gamma=2.5).require_model().alpha == 2.0
    assert construct(alpha=0.75, beta=2.0).require_model().gamma == 2.0
    assert construct(rho=1.0, kappa0=1.0).require_model().beta == 1.0
    assert construct(gamma=2.5).to_builtin()['gamma'] == 2.5

    with pytest.raises(ValueError):
        construct().require_model()
    with pytest.raises(ValueError):
        construct(gamma=2.5, alpha=1.0)
    with pytest.raises(ValueError):
        construct(rho=1.0)
    with pytest.raises(ValueError):
        construct(rho=1.0, kappa0=1.0, beta=2.0)
    with pytest.raises(ValueError):
        construct(gamma=2.5, theta=4.0)
    with pytest.raises(ValueError):
        construct(gamma=0.5)
