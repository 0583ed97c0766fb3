import json
import os
import subprocess
import sys

import pytest

from frex import run
from src.misc.console import color_setting, get_console


def test_solve_fral(capsys):
    assert run(['solve', '0 + (x + 0) + 0 = x']) == 0
    out = capsys.readouterr().out
    assert 'lftNeutrality' in out and 'rgtNeutrality' in out
    assert out.splitlines()[0].strip().startswith('(')


def test_solve_frex_and_check(capsys, tmp_path):
    path = tmp_path / 'goal.cert'
    argv = ['solve', '--pres', 'monoid', '--mode', 'frex', '--algebra', 'nat-add', '--emit', str(path),
            '(x + 3) + 2 = x + 5']
    assert run(argv) == 0
    assert '≡⟨' in capsys.readouterr().out
    assert json.loads(path.read_bytes())['algebra'] == 'nat-add'

    assert run(['check', str(path)]) == 0
    assert capsys.readouterr().out.startswith('ok: ')


def test_commuted_constant_needs_commutativity(capsys):
    goal = '(x + 3) + 2 = 5 + x'
    assert run(['solve', '--pres', 'cmonoid', '--mode', 'frex', '--algebra', 'nat-add', goal]) == 0
    capsys.readouterr()
    assert run(['solve', '--pres', 'monoid', '--mode', 'frex', '--algebra', 'nat-add', goal]) == 1
    assert 'not provable' in capsys.readouterr().err


def test_latex_and_timings(capsys):
    assert run(['solve', '--pres', 'invmonoid', '--print', 'latex', '-v', 'inv(x * y) = inv(y) * inv(x)']) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith(r'\begin{align*}')
    assert 'solve:' in captured.err


@pytest.mark.parametrize('argv', [
    [],
    ['solve'],
    ['solve', '--pres', 'group', 'x = x'],
    ['solve', '--mode', 'frex', 'x = x'],
    ['solve', '--algebra', 'nat-add', 'x = x'],
    ['solve', '--mode', 'frex', '--algebra', 'list-rev', '--pres', 'cmonoid', 'x = x'],
    ['solve', 'x + = y'],
    ['solve', 'x + y'],
    ['lemma', 'x = x'],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_help(capsys):
    assert run(['--help']) == 0
    assert 'solve' in capsys.readouterr().out


def test_check_rejects(capsys, tmp_path):
    path = tmp_path / 'goal.cert'
    assert run(['solve', '--emit', str(path), '0 + (x + 0) + 0 = x']) == 0
    obj = json.loads(path.read_bytes())
    obj['steps'] = obj['steps'][1:]
    path.write_text(json.dumps(obj))
    capsys.readouterr()
    assert run(['check', str(path)]) == 1
    assert 'rejected' in capsys.readouterr().err

    obj['algebra'] = 'no-such-algebra'
    path.write_text(json.dumps(obj))
    assert run(['check', str(path)]) == 1

    path.write_bytes(b'not a certificate')
    assert run(['check', str(path)]) == 2
    assert run(['check', str(tmp_path / 'missing.cert')]) == 2


def test_lemma(capsys, tmp_path):
    path = tmp_path / 'lemma.cert'
    assert run(['lemma', '--name', 'unitSandwich', '--emit', str(path), '0 + (x + 0) + 0 = x']) == 0
    assert capsys.readouterr().out.startswith('unitSandwich : ')
    assert run(['check', str(path)]) == 0

    assert run(['lemma', '--name', 'swap', 'x + y = y + x']) == 1
    assert run(['lemma', '--name', 'swap', '--pres', 'cmonoid', 'x + y = y + x']) == 0


def test_color_setting(monkeypatch, capsys):
    monkeypatch.setenv('FREX_COLOR', '0')
    console = get_console()
    assert console.no_color and console.color_system is None
    assert run(['solve', '--pres', 'invmonoid', 'inv(inv(x)) = x']) == 0
    assert '\x1b[' not in capsys.readouterr().out

    monkeypatch.setenv('FREX_COLOR', '1')
    assert color_setting() is True and get_console().is_terminal
    monkeypatch.delenv('FREX_COLOR')
    assert color_setting() is None


def test_script_entry_point(root, tmp_path, capsys):
    path = tmp_path / 'goal.cert'
    assert run(['solve', '--emit', str(path), '0 + (x + 0) + 0 = x']) == 0
    script = os.path.join(root, 'tools', 'frex.py')
    env = dict(os.environ, FREX_COLOR='0')
    done = subprocess.run([sys.executable, script, 'check', str(path)], cwd=root, env=env,
                          capture_output=True, text=True)
    assert done.returncode == 0, done.stderr
    assert done.stdout.startswith('ok: ')
    assert '\x1b[' not in done.stdout

    done = subprocess.run([sys.executable, script, 'solve', 'x + = y'], cwd=root, env=env,
                          capture_output=True, text=True)
    assert done.returncode == 2
