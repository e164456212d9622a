import csv

import pytest
from lxml import etree

from figures.svg_chart import SVG_NS


def _last_line(result) -> str:
    return result.output.strip().splitlines()[-1]


def test_energy_closed_form(cli):
    result = cli('energy', '--x', '0', '--kd', '0.5', '--method', 'closed-form-x0')
    assert result.exit_code == 0
    assert _last_line(result).startswith('1.339799')


def test_energy_naive(cli):
    result = cli('energy', '--x', '0.1', '--kd', '0.5', '--method', 'naive')
    assert result.exit_code == 0
    assert float(_last_line(result)) == pytest.approx(1.322782, abs=1e-6)


def test_energy_routes_agree(cli):
    imag = cli('energy', '--x', '0.1', '--kd', '0.5', '--method', 'imag-axis')
    real = cli('energy', '--x', '0.1', '--kd', '0.5', '--method', 'real-axis')
    assert imag.exit_code == real.exit_code == 0
    assert abs(float(_last_line(imag)) - float(_last_line(real))) <= 1e-6


def test_energy_discrete(cli):
    result = cli('energy', '--x', '0.1', '--kd', '0.5', '--method', 'discrete', '--omega-max', '3', '--i-max', '50')
    assert result.exit_code == 0
    assert 0.9 < float(_last_line(result)) < 1.2


@pytest.mark.parametrize('args', [
    ('--x', '0.1', '--kd', '0.5', '--method', 'closed-form-x0'),
    ('--x', '0', '--kd', '0.5', '--method', 'discrete'),
    ('--x', '-0.1', '--kd', '0.5'),
    ('--x', '0.1', '--kd', '0'),
    ('--x', '0.1', '--kd', '0.5', '--method', 'spectral'),
    ('--x', '0.1', '--kd', '0.5', '--method', 'discrete', '--i-max', '0'),
    ('--kd', '0.5',),
])
def test_energy_usage_errors(cli, args):
    assert cli('energy', *args).exit_code == 2


def test_numerical_failure_exit_code(cli, tmp_path):
    config = tmp_path / 'tight.ini'
    config.write_text('tol_abs = 1e-15\ntol_rel = 1e-15\nmax_subdivisions = 1\n', encoding='utf-8')
    result = cli('--config', str(config), 'energy', '--x', '0.1', '--kd', '0.5')
    assert result.exit_code == 3
    assert 'did not converge' in result.output


def test_figure1_csv(cli, tmp_path):
    out = tmp_path / 'f1.csv'
    result = cli('figure', '1', '--samples', '40', '--out', str(out))
    assert result.exit_code == 0
    lines = out.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'omega,F_x0.1,G_x0.1,F_x0.01,G_x0.01'
    assert len(lines) == 41


def test_figure_default_path_and_reproducibility(cli, tmp_path):
    assert cli('figure', '3').exit_code == 0
    path = tmp_path / 'output' / 'figure3.csv'
    first = path.read_bytes()
    assert cli('figure', '3').exit_code == 0
    assert path.read_bytes() == first
    rows = list(csv.reader(path.read_text(encoding='utf-8').splitlines()))
    assert rows[0] == ['pole_frequency', 'shift_f1', 'shift_f2', 'is_top_zero']
    assert len(rows) == 51


def test_figure3_svg_shows_combined_shifts(cli, tmp_path):
    svg = tmp_path / 'f3.svg'
    assert cli('figure', '3', '--svg', str(svg)).exit_code == 0
    polylines = etree.parse(str(svg)).getroot().findall(f'.//{{{SVG_NS}}}polyline')
    assert len(polylines) == 3


@pytest.mark.parametrize('args', [('4',), ('0',), ('3', '--x', '0'), ('1', '--kd', '-1'), ('1', '--x', '0.3'), ('2', '--x', '0.1')])
def test_figure_usage_errors(cli, args):
    assert cli('figure', *args).exit_code == 2


def test_failed_svg_removes_csv(cli, tmp_path, monkeypatch):
    def fail(*args, **kwargs):
        raise OSError("disk full")

    monkeypatch.setattr('commands.figure.write_svg', fail)
    out = tmp_path / 'f3.csv'
    result = cli('figure', '3', '--out', str(out), '--svg', str(tmp_path / 'f3.svg'))
    assert result.exit_code == 3
    assert 'disk full' in result.output
    assert not out.exists()


def test_check_default_run(cli):
    result = cli('check')
    assert result.exit_code == 0
    for family in ('route equivalence', 'lossless limit', 'complex-zero residual', 'interlacing', 'lehman limit'):
        assert family in result.output
    assert 'FAIL' not in result.output


def test_check_forced_failure(cli):
    result = cli('check', '--tol', '1e-15', '--grid-x', '0.1', '--grid-kd', '0.5', '--samples', '2')
    assert result.exit_code == 1


def test_check_grid_flags(cli):
    result = cli('check', '--grid-x', '0.01,0.1', '--grid-kd', '0.5,2', '--samples', '2')
    assert result.exit_code == 0
    row = next(line for line in result.output.splitlines() if line.startswith('route equivalence'))
    assert row.split()[2] == '4'


def test_check_rejects_malformed_list(cli):
    assert cli('check', '--grid-x', '0.1,abc').exit_code == 2


def test_sweep(cli, tmp_path):
    out = tmp_path / 'sweep.csv'
    result = cli('sweep', '--x', '0', '--d', '0.5,1,2', '--out', str(out))
    assert result.exit_code == 0
    rows = list(csv.DictReader(out.read_text(encoding='utf-8').splitlines()))
    assert [row['d'] for row in rows] == ['0.5', '1', '2']
    assert len({row['E_per_area_times_d2'] for row in rows}) == 1
    assert float(rows[0]['C']) < 0


@pytest.mark.parametrize('distances', ['0,1', '1,0.5', '-1'])
def test_sweep_usage_errors(cli, distances):
    assert cli('sweep', '--d', distances).exit_code == 2


@pytest.mark.parametrize('flags', [('--tol-abs', '-1'), ('--jobs', '0'), ('--tol-rel', 'nan')])
def test_invalid_global_flags(cli, flags):
    assert cli(*flags, 'energy', '--x', '0', '--kd', '0.5').exit_code == 2


def test_unknown_config_key(cli, tmp_path):
    config = tmp_path / 'bad.ini'
    config.write_text('tolerance = 1e-6\n', encoding='utf-8')
    assert cli('--config', str(config), 'energy', '--x', '0', '--kd', '0.5').exit_code == 2


@pytest.mark.parametrize('text', ['tol_abs 1e-9\n', 'i_max = 20\ni_max = 30\n', 'tol_abs = 1e-9%\n'])
def test_malformed_config_file(cli, tmp_path, text):
    config = tmp_path / 'bad.ini'
    config.write_text(text, encoding='utf-8')
    result = cli('--config', str(config), 'energy', '--x', '0', '--kd', '0.5')
    assert result.exit_code == 2
    assert 'invalid configuration' in result.output


def test_percent_in_config_value(cli, tmp_path):
    config = tmp_path / 'percent.ini'
    config.write_text('out_dir = out%x\n', encoding='utf-8')
    assert cli('--config', str(config), 'energy', '--x', '0', '--kd', '0.5').exit_code == 0


def test_figure2_is_byte_identical_across_runs(cli, tmp_path):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    assert cli('figure', '2', '--out', str(first)).exit_code == 0
    assert cli('figure', '2', '--out', str(second)).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    header, *rows = first.read_text(encoding='utf-8').splitlines()
    assert header == 'x,exact,naive,discrete'
    assert len(rows) == 31
