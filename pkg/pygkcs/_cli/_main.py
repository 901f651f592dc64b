#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import sys
import time
import typing
import logging
import argparse
import pygkcs
# noinspection PyCompatibility
from . import commands
from .commands._argparse_helpers import ArgumentParser
from .commands._subsystems.output import Output
from .commands._util import run_config
from .commands._yaml import YAMLLoader


VALIDATION_ERROR_EXIT_CODE = 1

NUMERICAL_ERROR_EXIT_CODE = 2

_RESERVED_DESTINATIONS = {'help', 'config'}

_logger = logging.getLogger(__name__)

_LOG_FORMAT = '%(asctime)s %(process)5d %(levelname)-8s %(name)s: %(message)s'


def main() -> None:
    logging.basicConfig(format=_LOG_FORMAT)  # Using the default log level; it will be overridden later.

    try:
        sys.exit(_main_impl(sys.argv[1:]))
    except KeyboardInterrupt:
        _logger.info('Interrupted')
        _logger.debug('Stack trace where the program has been interrupted', exc_info=True)
        sys.exit(1)
    except AssertionError:
        raise  # Re-raise directly in order to have the stack trace printed. The user is not expected to see this.
    except ValueError as ex:  # Domain errors are validation errors, too.
        print('Error: %s:' % type(ex).__name__, ex, file=sys.stderr)
        _logger.info('Validation error: %s', ex, exc_info=True)
        sys.exit(VALIDATION_ERROR_EXIT_CODE)
    except pygkcs.specfun.NumericalError as ex:
        print('Numerical error: %s:' % type(ex).__name__, ex, file=sys.stderr)
        _logger.info('Numerical error: %s', ex, exc_info=True)
        sys.exit(NUMERICAL_ERROR_EXIT_CODE)
    except Exception as ex:
        print('Error: %s:' % type(ex).__name__, ex, file=sys.stderr)
        _logger.info('Unhandled exception: %s', ex, exc_info=True)
        sys.exit(1)


def _main_impl(argv: typing.Sequence[str]) -> int:
    command_instances: typing.Sequence[commands.Command] = [cls() for cls in commands.get_available_command_classes()]

    root_parser, command_parsers = _construct_argument_parser(command_instances)
    args = root_parser.parse_args(argv)

    _configure_logging(args.verbose)

    _logger.debug('Available commands: %s', command_instances)

    if not hasattr(args, 'func'):
        print('No command specified, nothing to do. Run with --help for usage help.', file=sys.stderr)
        print('Available commands:', file=sys.stderr)
        for cmd in command_instances:
            text = f'\t{cmd.names[0]}'
            if len(cmd.names) > 1:
                text += f' (aliases: {", ".join(cmd.names[1:])})'
            print(text, file=sys.stderr)
        return VALIDATION_ERROR_EXIT_CODE

    if args.config is not None:
        # The values from the file become the defaults of the command, so the command line takes precedence.
        _apply_config(args.config, command_parsers[args.command_name])
        args = root_parser.parse_args(argv)

    _logger.debug('Parsed args: %s', args)
    started_at = time.monotonic()
    result = args.func(args)
    _logger.debug('Command executed in %.1f seconds', time.monotonic() - started_at)
    assert isinstance(result, int)
    return result


def _construct_argument_parser(command_instances: typing.Sequence[commands.Command]) \
        -> typing.Tuple[argparse.ArgumentParser, typing.Dict[str, argparse.ArgumentParser]]:
    from pygkcs import __version__

    root_parser = ArgumentParser(
        formatter_class=argparse.RawTextHelpFormatter,
        description='''
Coherent states of the Gol'dman-Krivchenkov model built from Meixner-Pollaczek
polynomials, with every closed form checked against an independent route.

The document printed into stdout (or written with --out) is machine-readable:
CSV, JSON or YAML. The stderr output is human-readable; most of it is
suppressed by default but it can be enabled with '-v'.

Exit codes: 0 success; 1 invalid input; 2 numerical failure (the document is
still written and carries the error); 3 verification failure.
'''.strip('\r\n'))

    # Register common arguments
    root_parser.add_argument(
        '--version', '-V',
        action='version',
        version=f'%(prog)s {__version__}',
        help='Print the version string and exit.',
    )
    root_parser.add_argument(
        '--verbose', '-v',
        action='count',
        help='Increase the verbosity of the output. Twice for extra verbosity.',
    )

    # Register commands
    command_parsers: typing.Dict[str, argparse.ArgumentParser] = {}
    subparsers = root_parser.add_subparsers()
    for cmd in command_instances:
        if cmd.examples:
            epilog = 'Examples:\n' + cmd.examples
        else:
            epilog = ''

        parser = subparsers.add_parser(
            cmd.names[0],
            help=cmd.help,
            epilog=epilog,
            aliases=cmd.names[1:],
            formatter_class=argparse.RawTextHelpFormatter,
        )
        parser.add_argument(
            '--config',
            metavar='PATH',
            help='''
A YAML file with a flat mapping of option names (without the leading dashes)
to values. The values become the defaults of this command, so the options
given on the command line override them. Unknown keys are rejected.
'''.strip())
        cmd.register_arguments(parser)
        for sf in cmd.subsystem_factories:
            sf.register_arguments(parser)

        parser.set_defaults(func=_make_executor(cmd), command_name=cmd.names[0])
        command_parsers[cmd.names[0]] = parser

    return root_parser, command_parsers


def _apply_config(path: str, parser: argparse.ArgumentParser) -> None:
    try:
        with open(path, encoding='utf8') as f:
            text = f.read()
    except OSError as ex:
        raise ValueError(f'Cannot read the configuration file {path!r}: {ex}') from None
    try:
        mapping = YAMLLoader().load_flat_mapping(text)
    except ValueError:
        raise
    except Exception as ex:
        raise ValueError(f'Cannot parse the configuration file {path!r}: {ex}') from None

    # noinspection PyProtectedMember
    known = {a.dest for a in parser._actions} - _RESERVED_DESTINATIONS
    defaults: typing.Dict[str, typing.Any] = {}
    for key, value in mapping.items():
        dest = key.replace('-', '_')
        if dest not in known:
            raise ValueError(f'Unknown key {key!r} in the configuration file {path!r}; known keys: '
                             f'{", ".join(sorted(k.replace("_", "-") for k in known))}')
        defaults[dest] = value
    _logger.info('Configuration from %r: %s', path, defaults)
    parser.set_defaults(**defaults)


def _make_executor(cmd: commands.Command) -> typing.Callable[[argparse.Namespace], int]:
    def execute(args: argparse.Namespace) -> int:
        subsystems: typing.List[object] = []
        for sf in cmd.subsystem_factories:
            try:
                ss = sf.construct_subsystem(args)
            except ValueError as ex:
                raise ValueError(f'Invalid arguments for {type(sf).__name__!r} of command {cmd.names[0]!r}: '
                                 f'{ex}') from ex
            else:
                subsystems.append(ss)
        _logger.debug('Invoking %r with subsystems %r and arguments %r', cmd, subsystems, args)
        try:
            return cmd.execute(args, subsystems)
        except ValueError:
            raise
        except pygkcs.specfun.NumericalError as ex:
            print('Numerical error: %s:' % type(ex).__name__, ex, file=sys.stderr)
            _logger.info('Numerical error in %r: %s', cmd, ex, exc_info=True)
            for ss in subsystems:
                if isinstance(ss, Output):
                    ss.emit(run_config(args, cmd.names[0], *subsystems), [], error=ex)
            return NUMERICAL_ERROR_EXIT_CODE

    return execute


def _configure_logging(verbosity_level: typing.Optional[int]) -> None:
    """
    Until this function is invoked we're running the bootstrap default configuration.
    This function changes the configuration to use the correct production settings as specified.
    """
    log_level = {
        0: logging.WARNING,
        1: logging.INFO,
        2: logging.DEBUG,
    }.get(verbosity_level or 0, logging.DEBUG)

    logging.root.setLevel(log_level)

    try:
        # This is not listed among the deps because it is not actually required at all.
        import coloredlogs
        # The level spec applies to the handler, not the root logger! This is different from basicConfig().
        coloredlogs.install(level=log_level, fmt=_LOG_FORMAT)
    except Exception as ex:
        _logger.debug('Colored logs are not available: %s: %s', type(ex), ex)
        _logger.info('Consider installing "coloredlogs" from PyPI to make log messages look better')
