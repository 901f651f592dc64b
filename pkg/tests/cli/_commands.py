#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import csv
import json
import math
import typing
import pathlib
import pytest
from ruamel import yaml
from ._subprocess import run_cli_tool, run_cli_tool_with_preamble, CalledProcessError


_TIMEOUT = 120.0


def _read_csv(text: str) -> typing.List[typing.Dict[str, str]]:
    return list(csv.DictReader(line for line in text.splitlines() if not line.startswith('#')))


def _unittest_trivial() -> None:
    assert run_cli_tool('--version', timeout=_TIMEOUT).strip().endswith(
        (pathlib.Path(__file__).parent.parent.parent / 'pygkcs' / 'VERSION').read_text().strip())

    for args in [(), ('invalid-command',), ('eigen', '--m-max', 'three'), ('eigen', '--no-such-option')]:
        with pytest.raises(CalledProcessError) as ex:
            run_cli_tool(*args, timeout=_TIMEOUT)
        assert ex.value.returncode == 1, args


def _unittest_validation_errors() -> None:
    cases = [
        ('eigen',),                                          # The model is required.
        ('eigen', '--gamma', '0.5'),                         # gamma shall exceed one.
        ('eigen', '--gamma', '2.5', '--alpha', '1'),         # Two parameter groups.
        ('cs-norm', '--gamma', '2.5', '--theta', '4'),       # The angle is out of range.
        ('cs-norm', '--gamma', '2.5', '--epsilon', '0'),
        ('measure', '--gamma', '2.5', '--x-grid', '0:1:0'),  # Empty grid.
        ('cs-norm', '--rho', '1', '--kappa0', '1', '--beta', '2'),
    ]
    for args in cases:
        with pytest.raises(CalledProcessError) as ex:
            run_cli_tool(*args, timeout=_TIMEOUT)
        assert ex.value.returncode == 1, args
        assert ex.value.output == '', args


def _unittest_eigen() -> None:
    rows = _read_csv(run_cli_tool('eigen', '--gamma', '2.5', '--m-max', '2', '--xi-grid', '0.5,1,2',
                                  timeout=_TIMEOUT))
    assert len(rows) == 9
    assert set(rows[0]) == {'m', 'eigenvalue', 'xi', 'psi'}
    # The spectrum is equidistant with the spacing 4β.
    levels = sorted({float(r['eigenvalue']) for r in rows})
    assert levels[1] - levels[0] == pytest.approx(4.0)
    assert levels[2] - levels[1] == pytest.approx(4.0)


def _unittest_mp_poly() -> None:
    rows = _read_csv(run_cli_tool('mp-poly', '--lam', '1.25', '--m-max', '6', '--x-grid=-2:2:5', timeout=_TIMEOUT))
    assert len(rows) == 7 * 5
    for r in rows:
        assert float(r['difference']) <= 1e-9 * max(1.0, abs(float(r['recurrence'])))


def _unittest_cs_norm_json() -> None:
    doc = json.loads(run_cli_tool('cs-norm', '--gamma', '2.5', '--x=-1,0,1', '-F', 'json', timeout=_TIMEOUT))
    assert set(doc) == {'config', 'rows', 'reports'}
    assert doc['config']['command'] == 'cs-norm'
    assert doc['config']['model']['gamma'] == 2.5
    assert doc['config']['model']['epsilon'] == 0.1
    assert [r['x'] for r in doc['rows']] == [-1.0, 0.0, 1.0]
    for r in doc['rows']:
        assert r['closed'] == pytest.approx(r['series'], rel=1e-8)
        assert r['rel_difference'] < 1e-8
    # The reflection x -> -x at theta = pi/2 leaves N unchanged.
    assert doc['rows'][0]['closed'] == pytest.approx(doc['rows'][2]['closed'], rel=1e-9)


def _unittest_measure_yaml() -> None:
    text = run_cli_tool('measure', '--gamma', '2.5', '--theta', '1.0', '--x-grid=-2:2:5', '-F', 'yaml',
                        timeout=_TIMEOUT)
    assert text.startswith('---')
    doc = yaml.YAML(typ='safe').load(text)
    assert len(doc['rows']) == 5
    for r in doc['rows']:
        assert r['density'] == pytest.approx(r['upsilon'] * r['normalization'], rel=1e-14)
    report, = doc['reports']
    assert report['passed'] is True


def _unittest_overlap_and_cs_eval() -> None:
    rows = _read_csv(run_cli_tool('overlap', '--gamma', '2.5', '--x=-1,0,1', timeout=_TIMEOUT))
    assert len(rows) == 9
    for r in rows:
        if r['i'] == r['j']:
            assert float(r['re']) == 1.0
        assert 0 < float(r['abs']) <= 1.0

    rows = _read_csv(run_cli_tool('cs-eval', '--gamma', '2.5', '--x', '0.4', '--xi-grid', '0.5:3:6',
                                  timeout=_TIMEOUT))
    assert len(rows) == 6
    for r in rows:
        assert float(r['difference']) < 1e-7


def _unittest_determinism(tmp_path: pathlib.Path) -> None:
    args = ('cs-norm', '--gamma', '2.5', '--x=-2:2:5')
    assert run_cli_tool(*args, timeout=_TIMEOUT) == run_cli_tool(*args, timeout=_TIMEOUT)

    # The document does not depend on where it is written.
    out = tmp_path / 'out.csv'
    run_cli_tool(*args, '-o', str(out), timeout=_TIMEOUT)
    assert out.read_text() == run_cli_tool(*args, timeout=_TIMEOUT)


def _unittest_config_file(tmp_path: pathlib.Path) -> None:
    config = tmp_path / 'config.yaml'
    config.write_text('gamma: 2.5\nepsilon: 0.2\nx: "0,1"\n')
    from_file = json.loads(run_cli_tool('cs-norm', '--config', str(config), '-F', 'json', timeout=_TIMEOUT))
    from_args = json.loads(run_cli_tool('cs-norm', '--gamma', '2.5', '--epsilon', '0.2', '--x', '0,1', '-F', 'json',
                                        timeout=_TIMEOUT))
    assert from_file == from_args

    # The command line overrides the file.
    overridden = json.loads(run_cli_tool('cs-norm', '--config', str(config), '--epsilon', '0.3', '-F', 'json',
                                         timeout=_TIMEOUT))
    assert overridden['config']['model']['epsilon'] == 0.3

    config.write_text('gamma: 2.5\nno-such-key: 1\n')
    with pytest.raises(CalledProcessError) as ex:
        run_cli_tool('cs-norm', '--config', str(config), timeout=_TIMEOUT)
    assert ex.value.returncode == 1

    with pytest.raises(CalledProcessError) as ex:
        run_cli_tool('cs-norm', '--config', str(tmp_path / 'missing.yaml'), timeout=_TIMEOUT)
    assert ex.value.returncode == 1


def _unittest_numerical_error() -> None:
    # Away from the origin, the closed form without the (1 - mu)^(-2ix) factor is not real.
    with pytest.raises(CalledProcessError) as ex:
        run_cli_tool('cs-norm', '--gamma', '2.5', '--x', '1', '--literal', timeout=_TIMEOUT)
    assert ex.value.returncode == 2
    assert ex.value.output.strip().startswith('# error: IdentityViolationError:')

    with pytest.raises(CalledProcessError) as ex:
        run_cli_tool('cs-norm', '--gamma', '2.5', '--x', '1', '--literal', '-F', 'json', timeout=_TIMEOUT)
    assert ex.value.returncode == 2
    doc = json.loads(ex.value.output)
    assert doc['error']['type'] == 'IdentityViolationError'
    assert doc['rows'] == []

    # At the origin the literal display is correct.
    rows = _read_csv(run_cli_tool('cs-norm', '--gamma', '2.5', '--x', '0', '--literal', timeout=_TIMEOUT))
    assert float(rows[0]['closed']) == pytest.approx(float(rows[0]['series']), rel=1e-8)


def _unittest_verify() -> None:
    doc = json.loads(run_cli_tool('verify', '--suite', 'gk_model', '--suite', 'specfun', '-F', 'json',
                                  timeout=_TIMEOUT))
    assert doc['reports']
    assert all(r['passed'] for r in doc['reports'])
    modules = [r['module'] for r in doc['reports']]
    # The suites run in the fixed order regardless of the command line.
    assert modules.index('gk_model') > modules.index('specfun')
    assert all(math.isfinite(r['rel_error']) for r in doc['reports'])
    assert all(r['identity'] for r in doc['reports'])

    with pytest.raises(CalledProcessError) as ex:
        run_cli_tool('verify', '--suite', 'no-such-suite', timeout=_TIMEOUT)
    assert ex.value.returncode == 1

    # The ladder is validated before any suite runs.
    for ladder in ('0.01,0.1', '0.1,0.1', '0.1,0'):
        with pytest.raises(CalledProcessError) as ex:
            run_cli_tool('verify', '--suite', 'gk_model', '--eps-ladder', ladder, timeout=_TIMEOUT)
        assert ex.value.returncode == 1
        assert not ex.value.output.strip()
    run_cli_tool('verify', '--suite', 'gk_model', '--eps-ladder', '0.2:0.05:4', timeout=_TIMEOUT)


def _unittest_verify_detects_perturbed_constant() -> None:
    # A one-percent error in a single coefficient of the log-gamma approximation shall be caught.
    preamble = 'import pygkcs.specfun._gamma as g; g._LANCZOS_COEFFICIENTS[4] *= 1.01'
    with pytest.raises(CalledProcessError) as ex:
        run_cli_tool_with_preamble(preamble, 'verify', '--suite', 'specfun', timeout=_TIMEOUT)
    assert ex.value.returncode == 3
    failed = [r for r in _read_csv(ex.value.output) if r['passed'] == 'false']
    assert failed
    assert all(r['module'] == 'specfun' for r in failed)
