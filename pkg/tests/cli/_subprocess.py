#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import os
import sys
import typing
import logging
import pathlib
import subprocess
from subprocess import CalledProcessError as CalledProcessError


REPOSITORY_ROOT = pathlib.Path(__file__).absolute().parent.parent.parent


_logger = logging.getLogger(__name__)


def run_process(*args: str, timeout: typing.Optional[float] = None) -> str:
    r"""
    This is a wrapper over :func:`subprocess.check_output` that runs the command from the repository root
    with the package importable.

    :param args: The args to run.

    :param timeout: Give up waiting if the command could not be completed in this much time and raise TimeoutExpired.
        No limit by default.

    :return: stdout of the command. On a non-zero exit code, :class:`CalledProcessError` is raised;
        its ``returncode`` and ``output`` hold the exit code and stdout.

    >>> run_process(sys.executable, '-c', 'import time; time.sleep(10)', timeout=0.1)
    Traceback (most recent call last):
    ...
    subprocess.TimeoutExpired: ...
    """
    cmd = list(map(str, args))
    _logger.info('Running process with timeout=%s: %s', timeout if timeout is not None else 'inf', ' '.join(cmd))
    stdout = subprocess.check_output(cmd,
                                     stderr=sys.stderr,
                                     timeout=timeout,
                                     encoding='utf8',
                                     cwd=str(REPOSITORY_ROOT),
                                     env=_get_env())
    assert isinstance(stdout, str)
    return stdout


def run_cli_tool(*args: str, timeout: typing.Optional[float] = None) -> str:
    """
    A wrapper over :func:`run_process` that runs the CLI tool with the specified arguments.
    """
    return run_process(sys.executable, '-m', 'pygkcs', *args, timeout=timeout)


def run_cli_tool_with_preamble(preamble: str, *args: str, timeout: typing.Optional[float] = None) -> str:
    """
    Runs the CLI tool in an interpreter that executes ``preamble`` first, for example, to perturb a constant.
    """
    code = f'{preamble}\nfrom pygkcs._cli import main\nmain()\n'
    return run_process(sys.executable, '-c', code, *args, timeout=timeout)


def _get_env() -> typing.Dict[str, str]:
    env = os.environ.copy()
    env['PYTHONUNBUFFERED'] = '1'
    env['PYTHONPATH'] = os.pathsep.join(filter(None, [str(REPOSITORY_ROOT), env.get('PYTHONPATH', '')]))
    return env
