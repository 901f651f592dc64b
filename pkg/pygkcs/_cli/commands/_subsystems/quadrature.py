#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import argparse
import pygkcs
from ._base import SubsystemFactory


class QuadratureFactory(SubsystemFactory):
    """
    Constructs the quadrature specification; its tolerance is also the tolerance of the series evaluations.
    """

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        defaults = pygkcs.resolution.QuadratureSpec()
        parser.add_argument(
            '--quad-nodes',
            type=int,
            default=defaults.n_nodes,
            metavar='COUNT',
            help='''
The number of quadrature nodes per panel, at least 16. Default: %(default)s
'''.strip())
        parser.add_argument(
            '--tol',
            type=float,
            default=pygkcs.specfun.DEFAULT_COMPOSITE_TOLERANCE,
            metavar='FLOAT',
            help='''
The relative tolerance of the series and of the quadrature tail certificates.
Default: %(default)s
'''.strip())

    def construct_subsystem(self, args: argparse.Namespace) -> pygkcs.resolution.QuadratureSpec:
        return pygkcs.resolution.QuadratureSpec(n_nodes=int(args.quad_nodes), tolerance=float(args.tol))


def _unittest_quadrature() -> None:
    import pytest

    q = QuadratureFactory().construct_subsystem(argparse.Namespace(quad_nodes=20, tol=1e-9))
    assert (q.n_nodes, q.tolerance) == (20, 1e-9)
    with pytest.raises(ValueError):
        QuadratureFactory().construct_subsystem(argparse.Namespace(quad_nodes=8, tol=1e-9))
