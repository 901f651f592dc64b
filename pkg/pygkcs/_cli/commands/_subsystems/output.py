#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import io
import sys
import csv
import enum
import typing
import logging
import argparse
import pygkcs
from .._yaml import YAMLDumper  # Reaching to an upper-level module like this is not great, do something about it.
from .._argparse_helpers import make_enum_action
from ._base import SubsystemFactory


Row = typing.Dict[str, typing.Any]

Document = typing.Dict[str, typing.Any]

_CSV_FLOAT_FORMAT = '.17g'

_logger = logging.getLogger(__name__)


class OutputFactory(SubsystemFactory):
    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        # noinspection PyTypeChecker
        parser.add_argument(
            '--format', '-F',
            default=next(iter(_Format)),
            action=make_enum_action(_Format),
            help='''
The format of the output document.

CSV is a single table with a header row; floating-point values are written
with 17 significant digits so that they convert back to the same doubles.
The table holds the rows of the command, or the verification reports if the
command produces no rows.

JSON and YAML hold the complete document: the effective configuration,
the rows, and the verification reports.

Default: %(default)s
'''.strip())
        parser.add_argument(
            '--out', '-o',
            metavar='PATH',
            help='''
Write the document into this file instead of stdout.
'''.strip())

    def construct_subsystem(self, args: argparse.Namespace) -> Output:
        return Output(args.format, args.out)


class _Format(enum.Enum):
    CSV  = enum.auto()
    JSON = enum.auto()
    YAML = enum.auto()


class Output:
    """
    Renders the output document and writes it into the destination. Identical inputs render byte-identically.
    """

    def __init__(self, fmt: _Format, path: typing.Optional[str]) -> None:
        if not isinstance(fmt, _Format):
            raise ValueError(f'Unknown output format: {fmt!r}')
        self._format = fmt
        self._path = path

    def emit(self,
             config:  typing.Dict[str, typing.Any],
             rows:    typing.Sequence[Row],
             reports: typing.Sequence[pygkcs.verification.VerificationReport] = (),
             error:   typing.Optional[Exception] = None) -> None:
        doc: Document = {
            'config':  config,
            'rows':    list(rows),
            'reports': [r.to_builtin() for r in reports],
        }
        if error is not None:
            doc['error'] = _describe_error(error)
        text = {
            _Format.CSV:  _render_csv,
            _Format.JSON: _render_json,
            _Format.YAML: _render_yaml,
        }[self._format](doc)
        if self._path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(self._path, 'w', encoding='utf8', newline='') as f:
                f.write(text)
            _logger.info('Output written into %r', self._path)

    def __repr__(self) -> str:
        return pygkcs.util.repr_attributes(self, self._format.name.lower(), path=self._path)


def _describe_error(ex: Exception) -> typing.Dict[str, typing.Any]:
    out: typing.Dict[str, typing.Any] = {'type': type(ex).__name__, 'message': str(ex)}
    partial = getattr(ex, 'partial', None)
    if isinstance(partial, pygkcs.specfun.SeriesEval):
        out['terms_used'] = partial.terms_used
        out['tail_bound'] = partial.tail_bound
    return out


def _render_csv(doc: Document) -> str:
    table: typing.List[Row] = doc['rows'] or doc['reports']
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    if table:
        columns = list(table[0].keys())
        writer.writerow(columns)
        for row in table:
            writer.writerow([_csv_cell(row.get(c)) for c in columns])
    if 'error' in doc:
        # Most CSV readers can be told to skip the lines starting with '#'.
        buf.write(f'# error: {doc["error"]["type"]}: {doc["error"]["message"]}\n')
    return buf.getvalue()


def _csv_cell(value: typing.Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format(value, _CSV_FLOAT_FORMAT)
    if isinstance(value, (list, tuple)):
        return ';'.join(map(_csv_cell, value))
    return str(value)


def _render_json(doc: Document) -> str:
    import simplejson as json
    return json.dumps(doc, ensure_ascii=False, separators=(',', ':'), ignore_nan=True) + '\n'


def _render_yaml(doc: Document) -> str:
    return YAMLDumper(explicit_start=True).dumps(doc)


def _unittest_output() -> None:
    import math
    from pygkcs.specfun import ConvergenceError, SeriesEval

    doc: Document = {
        'config':  {'command': 'cs-norm'},
        'rows':    [{'x': 0.1, 'closed': 1 / 3, 'terms': 7, 'ok': True}],
        'reports': [],
    }
    assert _render_csv(doc) == 'x,closed,terms,ok\n0.10000000000000001,0.33333333333333331,7,true\n'
    assert _render_json(doc) == '{"config":{"command":"cs-norm"},' \
        '"rows":[{"x":0.1,"closed":0.3333333333333333,"terms":7,"ok":true}],"reports":[]}\n'
    assert _render_yaml(doc).startswith('---\nconfig:\n  command: cs-norm\nrows:\n')

    doc['rows'] = [{'x': math.nan}]
    assert _render_json(doc).startswith('{"config":{"command":"cs-norm"},"rows":[{"x":null}]')

    doc['rows'] = []
    doc['error'] = _describe_error(ConvergenceError('cap reached', SeriesEval(1.0, 10, 0.5, False)))
    assert doc['error']['terms_used'] == 10
    assert _render_csv(doc) == '# error: ConvergenceError: cap reached\n'
