import io
import json
import subprocess
import sys

import pytest

from hyperpoly.cli import run
from hyperpoly.exact import parse_rational


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def rows(text):
    return [json.loads(line) for line in text.splitlines()]


def test_eval_poch():
    status, out, _ = call("eval", "poch", "--x", "1/2", "--n", "3")
    assert status == 0
    assert out == '{"value":"15/8"}\n'


def test_plain_output_and_negative_values():
    status, out, _ = call("eval", "poch", "--x", "-1/2", "--n", "3", "--output", "plain")
    assert (status, out) == (0, "-3/8\n")
    status, out, _ = call("eval", "poch", "--x=-1/2", "--n", "3", "--output", "plain")
    assert (status, out) == (0, "-3/8\n")


def test_eval_2f1_and_fd():
    assert rows(call("eval", "2f1", "--n", "3", "--b", "1/2", "--c", "2", "--x", "1")[1]) == [{"value": "35/64"}]
    status, out, _ = call("eval", "fd", "--n", "2", "--b", "1,1", "--c", "5", "--x", "1/2,1/3")
    assert status == 0 and rows(out) == [{"value": "379/540"}]


def test_eval_fd_float():
    status, out, _ = call("eval", "fd", "--n", "6", "--b", "1/2,1/3", "--c", "3", "--x", "1/4,1/5", "--mode", "float")
    (row,) = rows(out)
    assert status == 0
    assert row["value"] == pytest.approx(0.7023163856967171, rel=1e-14)
    assert row["condition"] >= 1.0


def test_eval_float_zero_condition_is_inf():
    status, out, _ = call("eval", "2f1", "--n", "2", "--b", "1", "--c", "1", "--x", "1", "--mode", "float")
    assert status == 0 and rows(out)[0]["condition"] == "inf"


def test_eval_cv_and_multinomial():
    assert rows(call("eval", "cv", "--alpha", "1", "--beta", "1", "--w", "1", "--z", "1", "--n", "2")[1]) == [
        {"lhs": "6", "rhs": "6"}
    ]
    (row,) = rows(call("eval", "multinomial", "--n", "1", "--a", "1,1", "--w", "1,2")[1])
    assert row == {"lhs": "3", "intermediate": "3", "rhs": "3"}


def test_verify_multinomial_n0():
    status, out, _ = call("verify", "multinomial", "--n", "0", "--a", "1,1", "--w", "1,2")
    (row,) = rows(out)
    assert status == 0 and row["equal"] is True
    assert row["lhs"] == row["rhs"] == row["intermediate"] == "1"


def test_verify_multinomial_trials_deterministic():
    argv = ["verify", "multinomial", "--trials", "40", "--seed", "42", "--r-max", "5", "--n-max", "12"]
    status, first, _ = call(*argv)
    _, second, _ = call(*argv)
    assert status == 0
    a, b = rows(first), rows(second)
    assert len(a) == 40 and all(r["equal"] for r in a)
    for r in a + b:
        r.pop("elapsed_ns")
    assert a == b


def test_verify_multinomial_jobs():
    argv = ["verify", "multinomial", "--trials", "10", "--seed", "1"]
    serial = rows(call(*argv)[1])
    parallel = rows(call(*argv, "--jobs", "2")[1])
    for r in serial + parallel:
        r.pop("elapsed_ns")
    assert serial == parallel


def test_verify_other_subjects():
    for argv in [
        ("verify", "poch", "--n", "12", "--x", "1/3"),
        ("verify", "2f1", "--n", "4", "--b", "1/2", "--c", "7/3", "--x", "2/5"),
        ("verify", "fd", "--n", "3", "--b", "1,1/2", "--c", "5", "--x", "1/2,1/3"),
        ("verify", "cv", "--alpha", "1/2", "--beta", "3/2", "--w", "2", "--z", "3", "--n", "2"),
    ]:
        status, out, _ = call(*argv)
        assert status == 0, argv
        assert all(r["equal"] for r in rows(out))


def test_rationals_round_trip():
    _, out, _ = call("verify", "multinomial", "--trials", "20", "--seed", "9")
    for row in rows(out):
        for key in ("lhs", "rhs"):
            text = row[key]
            assert str(parse_rational(text)) == text


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "poch", "--x", "1/0", "--n", "3"),
        ("eval", "poch", "--x", "abc", "--n", "3"),
        ("eval", "poch", "--x", "1", "--n", "3", "--bogus", "1"),
        ("eval", "fd", "--n", "2", "--b", "1,2", "--c", "3", "--x", "1"),
        ("eval", "multinomial", "--n", "2", "--a", "1,2", "--w", "1"),
        ("eval", "poch", "--n", "3"),
        ("eval", "poch", "--x", "1,2", "--n", "3"),
        ("bench", "poch", "--n", "3"),
        ("eval", "cv", "--alpha", "1", "--beta", "1", "--w", "1", "--z", "1", "--n", "2", "--mode", "float"),
        ("eval", "multinomial", "--n", "2", "--a", "1,2", "--w", "0,1", "--pivot", "1"),
        ("frobnicate", "poch"),
    ],
)
def test_input_errors_exit_1(argv):
    status, out, err = call(*argv)
    assert status == 1
    assert out == ""
    assert err.startswith("hyperpoly: error:")


def test_unknown_flag_is_named():
    _, _, err = call("eval", "poch", "--x", "1", "--n", "3", "--bogus", "1")
    assert "--bogus" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "2f1", "--n", "3", "--b", "1", "--c", "0", "--x", "1/2"),
        ("eval", "fd", "--n", "3", "--b", "1,1", "--c", "-1", "--x", "1,1"),
        ("eval", "fd", "--n", "3", "--b", "1", "--c", "0", "--x", "1", "--mode", "float"),
        ("verify", "2f1", "--n", "3", "--b", "3", "--c", "2", "--x", "1/2"),
        ("verify", "multinomial", "--n", "3", "--a", "1,-2", "--w", "1,2"),
        ("eval", "multinomial", "--n", "3", "--a", "1,-2", "--w", "1,2"),
    ],
)
def test_degenerate_exit_2(argv):
    assert call(*argv)[0] == 2


def test_unequal_exit_3(monkeypatch):
    import hyperpoly.cli as cli

    monkeypatch.setattr(cli, "gauss_sum", lambda n, b, c: 0)
    status, out, _ = call("verify", "2f1", "--n", "3", "--b", "1/2", "--c", "2", "--x", "1/3")
    assert status == 3
    assert [r["equal"] for r in rows(out)] == [True, False]


def test_bench_multinomial_small():
    status, out, _ = call("bench", "multinomial", "--n", "10", "--r", "3", "--seed", "4")
    (row,) = rows(out)
    assert status == 0
    assert row["equal"] is True
    assert row["lhs_terms"] == row["rhs_terms"] == 66


def test_bench_fd_small():
    status, out, _ = call("bench", "fd", "--n", "8", "--r", "2")
    (row,) = rows(out)
    assert status == 0 and row["terms"] == 45


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperpoly", "eval", "poch", "--x", "3", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"value":"360"}\n'
