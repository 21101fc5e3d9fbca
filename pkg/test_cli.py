"""
Tests for the command-line interface (main.main is called in-process)
"""
import csv
import io
import math

import orjson
import pytest

from main import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main, parse_complex, parse_grid


def _csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


# ----------------------------------------------------------------------------- literals

@pytest.mark.parametrize("text, expected", [
    ("0.3+0i", 0.3 + 0j),
    ("-1.5-2e-3i", -1.5 - 0.002j),
    ("2", 2 + 0j),
    ("-0.25i", -0.25j),
    ("1e-2+.5i", 0.01 + 0.5j),
])
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("text", ["1+i", "0.3 + 0.1i", "abc", "1+2j", ""])
def test_parse_complex_rejects_malformed(text):
    import argparse
    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex(text)


def test_parse_grid():
    assert parse_grid("-1:1:5") == (-1.0, 1.0, 5)
    import argparse
    for bad in ("0:1", "0:1:1", "a:b:c"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_grid(bad)


# ----------------------------------------------------------------------------- poly

def test_poly_table(capsys):
    assert main(['poly', '--family', 'legendre', '--n', '3', '--grid=-1:1:5']) == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)
    assert rows[0] == ['x', 'psi_0', 'psi_1', 'psi_2', 'psi_3']
    assert len(rows) == 6
    assert float(rows[-1][0]) == 1.0
    assert float(rows[-1][2]) == pytest.approx(math.sqrt(3.0), rel=1e-15)


def test_poly_constant_column(capsys):
    assert main(['poly', '--family', 'chebyshev', '--n', '0', '--grid', '0:0:2']) == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)
    assert [row[1] for row in rows[1:]] == ['1.0', '1.0']


def test_poly_json_to_file(tmp_path, capsys):
    target = tmp_path / "out" / "table.json"
    code = main(['poly', '--family', 'hermite', '--n', '2', '--grid=-1:1:3',
                 '--format', 'json', '--out', str(target)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    payload = orjson.loads(target.read_bytes())
    assert payload['columns'] == ['x', 'psi_0', 'psi_1', 'psi_2']
    assert len(payload['rows']) == 3


def test_poly_bad_alpha_exits_with_usage_code(capsys):
    assert main(['poly', '--family', 'laguerre', '--alpha', '-2', '--n', '2']) == EXIT_USAGE
    assert 'alpha' in capsys.readouterr().err


def test_unknown_family_exits_with_usage_code(capsys):
    assert main(['poly', '--family', 'jacobi']) == EXIT_USAGE


# ----------------------------------------------------------------------------- coherent

def test_coherent_coefficients(capsys):
    code = main(['coherent', '--family', 'legendre', '--z', '0.3+0i', '--mode', 'coeffs', '--dim', '32'])
    assert code == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)
    assert rows[0] == ['n', 'c_n_re', 'c_n_im']
    assert len(rows) == 33
    from coherent import legendre_norm
    assert float(rows[1][1]) == pytest.approx(legendre_norm(0.3) ** -0.5, rel=1e-12)


def test_coherent_hermite_coefficients_follow_factorials(capsys):
    assert main(['coherent', '--family', 'hermite', '--z', '1+0i']) == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)[1:]
    c0 = float(rows[0][1])
    assert c0 == pytest.approx(math.exp(-0.5), rel=1e-14)
    for n in range(1, 8):
        assert float(rows[n][1]) / c0 == pytest.approx(1.0 / math.sqrt(math.factorial(n)), rel=1e-13)


def test_coherent_outside_domain_names_the_bound(capsys):
    assert main(['coherent', '--family', 'legendre', '--z', '0.8+0i']) == EXIT_USAGE
    assert '1/sqrt(2)' in capsys.readouterr().err


def test_coherent_malformed_literal(capsys):
    assert main(['coherent', '--family', 'hermite', '--z', '1+i']) == EXIT_USAGE


def test_coherent_wavefunction_against_closed_form(capsys):
    code = main(['coherent', '--family', 'chebyshev', '--z=0.3-0.1i', '--mode', 'wavefunction',
                 '--grid=-0.5:0.5:3'])
    assert code == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)
    assert rows[0] == ['x', 'series_re', 'series_im', 'closed_form_re', 'closed_form_im', 'abs_diff']
    assert all(float(row[5]) < 1e-10 for row in rows[1:])


def test_coherent_wavefunction_default_grid_fits_laguerre(capsys):
    code = main(['coherent', '--family', 'laguerre', '--alpha', '1', '--z=0.5+0.2i',
                 '--mode', 'wavefunction'])
    assert code == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)[1:]
    assert len(rows) == 7
    assert float(rows[0][0]) == pytest.approx(0.25)
    assert all(float(row[5]) < 1e-8 for row in rows)


def test_coherent_wavefunction_marks_unavailable_closed_form(capsys, caplog):
    code = main(['coherent', '--family', 'legendre', '--z=0.3+0i', '--mode', 'wavefunction',
                 '--grid=0:1.2:2'])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    inside, outside = _csv_rows(captured.out)[1:]
    assert float(inside[5]) < 1e-8
    assert math.isfinite(float(outside[1]))
    assert outside[3] == 'nan' and outside[5] == 'nan'
    assert 'closed form unavailable' in caplog.text


def test_coherent_wavefunction_json_writes_null_for_unavailable_cells(capsys):
    code = main(['coherent', '--family', 'legendre', '--z=0.3+0i', '--mode', 'wavefunction',
                 '--grid=0:1.2:2', '--format', 'json'])
    assert code == EXIT_OK
    payload = orjson.loads(capsys.readouterr().out)
    assert payload['rows'][1][3] is None


# ----------------------------------------------------------------------------- verify / config

def test_verify_theorem2_chebyshev(capsys):
    code = main(['verify', '--suite', 'theorem2', '--family', 'chebyshev', '--dim', '64'])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    reports = orjson.loads(captured.out)
    assert len(reports) == 1
    assert reports[0]['check'] == 'theorem2'
    assert reports[0]['status'] == 'pass'
    assert '1 passed, 0 failed' in captured.err


def test_verify_failure_sets_exit_code(capsys):
    code = main(['verify', '--suite', 'theorem2', '--family', 'hermite', '--dim', '3'])
    assert code == EXIT_NUMERIC
    captured = capsys.readouterr()
    reports = orjson.loads(captured.out)
    assert reports[0]['status'] == 'fail'
    assert 'asserted check(s) failed: theorem2[hermite]' in captured.err


def test_verify_rejects_unknown_suite(capsys):
    assert main(['verify', '--suite', 'theorem3']) == EXIT_USAGE


@pytest.mark.parametrize("tol", ["0", "-1e-8"])
def test_verify_rejects_nonpositive_tolerance(capsys, tol):
    assert main(['verify', '--suite', 'theorem2', '--family', 'chebyshev', f'--tol={tol}']) == EXIT_USAGE
    assert 'tol must be positive' in capsys.readouterr().err


def test_verify_all_suites_pass(capsys):
    code = main(['verify', '--suite', 'all'])
    captured = capsys.readouterr()
    reports = orjson.loads(captured.out)
    failed = [(r['check'], r['family'], r['params']) for r in reports if r['status'] == 'fail']
    assert failed == []
    assert code == EXIT_OK
    assert {r['check'] for r in reports} >= {'theorem1', 'theorem2', 'eigen', 'overlap', 'moments',
                                          'orthonormality', 'unity', 'closed_forms.pochhammer'}


def test_verify_output_is_deterministic(capsys):
    argv = ['verify', '--suite', 'moments', '--suite', 'orthonormality', '--family', 'legendre']
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_config_prints_yaml(capsys):
    import yaml
    assert main(['config']) == EXIT_OK
    data = yaml.safe_load(capsys.readouterr().out)
    assert data['max_dim'] > 0
    assert 'tail_tol' in data


def test_help_exits_cleanly(capsys):
    assert main(['--help']) == EXIT_OK
    assert main([]) == EXIT_USAGE
