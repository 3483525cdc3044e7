"""Command-line behaviour and exit codes."""

import csv
import io
import json
import random

import pytest

from grasslog import cli
from grasslog.configspace import config_to_json, random_exact_configuration
from grasslog.grasspoly import special_config
from grasslog.polylog import sv_trilog


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cfg_file(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(config_to_json(random_exact_configuration(random.Random(3), 6, 3, bound=5))))
    return str(p)


def test_parse_complex():
    assert cli.parse_complex("1/2") == 0.5
    assert cli.parse_complex("1+i") == 1 + 1j
    assert cli.parse_complex("-i") == -1j
    assert cli.parse_complex("2.5-0.3j") == 2.5 - 0.3j
    with pytest.raises(ValueError):
        cli.parse_complex("abc")


def test_eval_sv_trilog(capsys):
    code, out, _ = run(capsys, "eval", "sv-trilog", "--z", "0.5")
    rep = json.loads(out)
    assert code == 0
    assert abs(rep["value"] - 1.0517998) < 1e-7
    assert rep["schema"] == "grasslog-report/1"
    assert rep["orientation"] == "+1:standard-complex" and "convention" in rep and rep["seed"] == 42


def test_eval_sv_dilog(capsys):
    code, out, _ = run(capsys, "eval", "sv-dilog", "--z", "i")
    assert code == 0 and abs(json.loads(out)["value"] - 0.9159655942) < 1e-9


def test_eval_grass_trilog_closed(capsys, cfg_file):
    code, out, _ = run(capsys, "eval", "grass-trilog", "--config", cfg_file, "--method", "closed")
    rep = json.loads(out)
    assert code == 0
    assert rep["closed"] == rep["value"]
    assert abs(rep["closed"] - (rep["lie"] - rep["diff_term"])) < 1e-15


def test_eval_grass_trilog_both(capsys, cfg_file):
    code, out, _ = run(capsys, "eval", "grass-trilog", "--config", cfg_file, "--method", "both",
                       "--budget", "300000")
    rep = json.loads(out)
    assert code == 0 and rep["budget"] == 300000
    assert "theorem_main" in rep["residuals"] and rep["samples"] > 0


def test_eval_grass_dilog(capsys, tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps(config_to_json(random_exact_configuration(random.Random(4), 4, 2))))
    code, out, _ = run(capsys, "eval", "grass-dilog", "--config", str(p))
    rep = json.loads(out)
    assert code == 0 and abs(rep["residuals"]["weight2"]) < 1e-5


def test_eval_missing_file(capsys):
    code, _, err = run(capsys, "eval", "grass-trilog", "--config", "/nonexistent/c.json")
    assert code == 2 and "cannot read" in err


def test_eval_malformed_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "eval", "grass-trilog", "--config", str(p))[0] == 2


def test_eval_degenerate_exit_code(capsys, tmp_path):
    p = tmp_path / "g3.json"
    p.write_text(json.dumps(config_to_json(special_config(2))))
    code, _, err = run(capsys, "eval", "grass-trilog", "--config", str(p))
    assert code == 3 and "Delta(0, 1, 3)" in err


def test_usage_errors(capsys):
    assert run(capsys, "eval", "sv-trilog")[0] == 2
    assert run(capsys, "eval", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2


def test_verify_exact(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "exact", "--seed", "7", "--out", str(out_path))
    rep = json.loads(out_path.read_text())
    assert code == 0 and out == ""
    assert rep["passed"] and rep["suite"] == "exact" and rep["cases"] == len(rep["results"])


def test_verify_forms_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "forms")
    b = run(capsys, "verify", "--suite", "forms")
    assert a[0] == 0 and a[1] == b[1]


def test_verify_quadrature_small_budget(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quadrature", "--budget", "200000")
    rep = json.loads(out)
    assert code == 0, [r for r in rep["results"] if not r["passed"]]
    assert rep["budget"] == 200000


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--z", "1/2,-1,2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == list(cli.TABLE_HEADER) and len(rows) == 4
    assert [r[0] for r in rows[1:]] == ["1/2", "-1", "2"]
    for r, z in zip(rows[1:], (0.5, -1, 2)):
        assert float(r[2]) == sv_trilog(z)
        assert abs(float(r[1]) - float(r[2]) - float(r[3])) < 1e-15


def test_table_empty_and_error_rows(capsys):
    code, out, _ = run(capsys, "table", "--z", "")
    assert code == 0 and out == ",".join(cli.TABLE_HEADER) + "\n"
    code, out, _ = run(capsys, "table", "--z", "0")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[1][1] == "error"
    assert run(capsys, "table", "--z", "1/2,zz")[0] == 2
