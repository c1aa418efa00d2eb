import json

import pytest

from eulercong.cli import dump_json, main

REPORT_KEYS = ["n", "m", "holds", "lhs", "rhs", "remainder", "cofactor"]


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse validation path
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_eulerian_plain(capsys):
    code, out, _ = run(capsys, "eulerian", "--n", "3")
    assert code == 0
    assert out.strip() == "t + 4*t^2 + t^3"


@pytest.mark.parametrize("method", ["recurrence", "bruteforce", "gf"])
def test_eulerian_methods_agree(capsys, method):
    code, out, _ = run(capsys, "eulerian", "--n", "5", "--method", method)
    assert code == 0
    assert out.strip() == "t + 26*t^2 + 66*t^3 + 26*t^4 + t^5"


def test_eulerian_json(capsys):
    code, out, _ = run(capsys, "eulerian", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"n": 2, "method": "recurrence", "coeffs": ["0", "1", "1"]}


def test_eulerian_latex(capsys):
    code, out, _ = run(capsys, "eulerian", "--n", "3", "--format", "latex")
    assert code == 0
    assert out.strip() == "A_{3}(t) = t + 4t^{2} + t^{3}"


def test_verify_single_plain(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1", "--m", "2")
    assert code == 0
    assert out.strip() == "n=1 m=2 holds=true remainder=0"


def test_verify_grid_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "10", "--m-max", "8",
                       "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 88
    for rep in reports:
        assert list(rep) == REPORT_KEYS
        assert rep["holds"] is True
        assert isinstance(rep["n"], int) and isinstance(rep["m"], int)
        for key in ("lhs", "rhs", "remainder", "cofactor"):
            assert all(isinstance(c, str) for c in rep[key])
    pairs = [(r["n"], r["m"]) for r in reports]
    assert pairs == sorted(pairs)


def test_verify_json_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "3", "--m-max", "3",
                       "--format", "json")
    assert code == 0
    text = out.rstrip("\n")
    assert dump_json(json.loads(text)) == text


def test_verify_parallel_deterministic(capsys):
    code, seq, _ = run(capsys, "verify", "--n-max", "4", "--m-max", "4",
                       "--format", "json")
    assert code == 0
    code, par, _ = run(capsys, "verify", "--n-max", "4", "--m-max", "4",
                       "--format", "json", "--parallel", "4")
    assert code == 0
    assert seq == par


def test_verify_invalid_m_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--n", "1", "--m", "0")
    assert code == 2
    assert "usage" in err


def test_verify_requires_range_or_pair(capsys):
    code, _, _ = run(capsys, "verify", "--n", "1")
    assert code == 2
    code, _, _ = run(capsys, "verify")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--n", "1", "--m", "2", "--n-max", "3")
    assert code == 2


def test_out_of_cap_exits_2(capsys):
    code, _, _ = run(capsys, "eulerian", "--n", "65")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--n", "1", "--m", "65")
    assert code == 2
    code, _, _ = run(capsys, "eulerian", "--n", "-1")
    assert code == 2


def test_unknown_flag_exits_2(capsys):
    code, _, _ = run(capsys, "verify", "--bogus")
    assert code == 2


def test_trace_plain(capsys):
    code, out, _ = run(capsys, "trace", "--n", "1", "--m", "2")
    assert code == 0
    assert "all_checks=true" in out
    assert "denominator at t=1: 4" in out


def test_trace_json(capsys):
    code, out, _ = run(capsys, "trace", "--n", "1", "--m", "2",
                       "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["n"] == 1 and rep["m"] == 2 and rep["holds"] is True
    assert rep["diff"] == {"num": ["0", "-1"], "den": ["1", "2", "1"]}
    assert rep["per_j"] == [
        {"j": 0, "value": {"num": [], "den": ["1"]}, "divisor_exponent": 0},
        {"j": 1, "value": {"num": ["0", "-1"], "den": ["1", "2", "1"]},
         "divisor_exponent": 2},
    ]
    assert rep["den_at_one"] == "4"


def test_trace_latex(capsys):
    code, out, _ = run(capsys, "trace", "--n", "1", "--m", "2",
                       "--format", "latex")
    assert code == 0
    assert "\\text{difference}" in out
