#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import sys
import typing
import argparse
import pygkcs
from . import _subsystems
from ._base import Command, SubsystemFactory
from ._util import run_config, parse_grid


VERIFICATION_FAILURE_EXIT_CODE = 3


class VerifyCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['verify']

    @property
    def help(self) -> str:
        return f'''
Run the self-verification suites: every identity of the library is checked
against an independent route on a fixed grid. One report per check.
The exit code is {VERIFICATION_FAILURE_EXIT_CODE} if any check fails.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
pygkcs verify
pygkcs verify --suite specfun --suite gk_model -F json -o reports.json
pygkcs verify --suite resolution --eps-ladder 0.2,0.1,0.05
'''.strip()

    @property
    def subsystem_factories(self) -> typing.Sequence[SubsystemFactory]:
        return [
            _subsystems.output.OutputFactory(),
        ]

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--suite', '-s',
            action='append',
            choices=list(pygkcs.verification.SUITES),
            help='''
Run this suite; may be repeated. The suites always run in the fixed order
regardless of the order they are listed in. Default: all suites.
'''.strip())
        parser.add_argument(
            '--eps-ladder',
            default=','.join(map(str, pygkcs.verification.DEFAULT_EPS_LADDER)),
            metavar='GRID',
            help='''
The regularization ladder of the resolution-of-identity traces, either
start:stop:count or a comma-separated list; positive and strictly decreasing.
Default: %(default)s
'''.strip())

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        output, = subsystems
        assert isinstance(output, _subsystems.output.Output)
        options = pygkcs.verification.SuiteOptions(eps_ladder=parse_grid(args.eps_ladder))
        reports = pygkcs.verification.run_suites(args.suite, options)
        failed = [r for r in reports if not r.passed]
        output.emit(run_config(args, self.names[0]), [], reports)
        for r in failed:
            print(r, file=sys.stderr)
        print(f'{len(reports) - len(failed)} of {len(reports)} checks passed', file=sys.stderr)
        return VERIFICATION_FAILURE_EXIT_CODE if failed else 0
