import io
import json
import subprocess
import sys

import pytest

from veronese_hilbert.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    return code, json.loads(out)


def test_hvector_plain():
    assert call("hvector", "--a", "1,1,1,1", "--d", "2")[:2] == (0, "1 2 1\n")


def test_classical_json():
    code, rec = call_json("classical", "--n", "4", "--d", "2")
    assert code == 0
    assert rec["status"] == "ok"
    assert rec["result"]["gorenstein"] is True
    assert rec["result"]["multiplicity"] == "8"
    assert rec["result"]["a_invariant"] == -2
    assert set(rec) == {"command", "input", "result", "status", "error_message"}


def test_hilbert_range():
    assert call("hilbert", "--a", "1,1,2", "--d", "2", "--i", "0..2")[:2] == (0, "1 4 9\n")
    code, rec = call_json("hilbert", "--a", "1,1,2", "--d", "2", "--i", "0..5")
    values = rec["result"]["values"]
    assert [v["i"] for v in values] == list(range(6))
    assert [v["value"] for v in values] == ["1", "4", "9", "16", "25", "36"]


def test_single_index():
    assert call("ehrhart", "--n", "4", "--d", "2", "--i", "3")[:2] == (0, "44\n")


def test_ehrhart_range():
    assert call("ehrhart", "--n", "4", "--d", "2", "--i", "0..3")[1] == "1 6 19 44\n"


def test_sorted_echo():
    code, rec = call_json("mult", "--a", "2,1,1", "--d", "2")
    assert rec["input"] == {"a": [1, 1, 2], "d": 2}
    assert rec["result"] == {"type": "scalar", "value": "2"}


@pytest.mark.parametrize(
    "argv",
    [
        ("hvector", "--a", "3,4,4,5,7", "--d", "7"),
        ("series", "--a", "1,2,2,3", "--d", "4"),
        ("mult", "--a", "9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9", "--d", "9"),
        ("ainv", "--a", "1,1,1,1", "--d", "2"),
        ("classical", "--n", "7", "--d", "3"),
        ("hilbert", "--a", "1,3,3", "--d", "4", "--i", "0..6"),
    ],
)
def test_plain_and_json_agree(argv):
    _, plain, _ = call(*argv)
    _, rec = call_json(*argv)
    numbers = []

    def collect(x):
        if isinstance(x, dict):
            for k, v in x.items():
                if k != "i":
                    collect(v)
        elif isinstance(x, list):
            for v in x:
                collect(v)
        elif isinstance(x, str) and x.lstrip("-").isdigit():
            numbers.append(x)
        elif isinstance(x, int) and not isinstance(x, bool):
            numbers.append(str(x))

    collect(rec["result"])
    tokens = plain.replace(":", " ").split()
    assert numbers == [t for t in tokens if t.lstrip("-").isdigit()]


def test_big_multiplicity_is_exact_string():
    code, rec = call_json("classical", "--n", "40", "--d", "9")
    assert rec["result"]["multiplicity"] == str(9 ** 39)


def test_series_and_ainv():
    code, out, _ = call("series", "--a", "2,2,2", "--d", "2")
    assert out.splitlines() == ["numerator: 1 3", "denominator_exponent: 3"]
    code, rec = call_json("ainv", "--a", "3,3", "--d", "4")
    assert rec["result"]["bound"] == -1
    assert rec["result"]["applicable"] is False


def test_verify_exit_code_tracks_overall():
    code, rec = call_json("verify", "--a", "1,1,2", "--d", "2")
    assert code == 0 and rec["result"]["overall"] is True
    code, out, _ = call("verify", "--a", "1,2,3", "--d", "4", "--max-i", "2")
    assert code == 0
    assert out.strip().endswith("overall: true")


def test_verify_mismatch_exits_one(monkeypatch):
    from veronese_hilbert import oracle

    monkeypatch.setattr(oracle, "hilbert_function_oracle", lambda vt, i: 7)
    code, rec = call_json("verify", "--a", "1,1,2", "--d", "2")
    assert code == 1
    assert rec["status"] == "ok"
    assert rec["result"]["overall"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ("mult", "--a", "1,1", "--d", "2"),
        ("mult", "--a", "3,1", "--d", "2"),
        ("classical", "--n", "1", "--d", "2"),
        ("ehrhart", "--n", "3", "--d", "3", "--i", "1"),
        ("bench", "--n", "23", "--d", "5", "--naive"),
    ],
)
def test_computation_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1 and err.startswith("error:")
    code, rec = call_json(*argv)
    assert code == 1
    assert rec["status"] == "error" and rec["error_message"]


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("nope",),
        ("mult", "--a", "x,y", "--d", "2"),
        ("mult", "--a", "1,2"),
        ("hilbert", "--a", "1,2", "--d", "2", "--i", "3..1"),
        ("hilbert", "--a", "1,2", "--d", "2", "--i", "-1"),
    ],
)
def test_parse_errors_exit_two(argv):
    assert call(*argv)[0] == 2


def test_global_flags_before_subcommand():
    out = io.StringIO()
    assert run(["--json", "mult", "--a", "2,2,2", "--d", "2"], stdout=out) == 0
    assert json.loads(out.getvalue())["result"]["value"] == "4"


def test_bench_seeded_and_agreeing():
    code, rec = call_json("bench", "--n", "12", "--d", "6", "--naive", "--seed", "3")
    assert code == 0
    assert rec["result"]["tables_agree"] is True
    _, again = call_json("bench", "--n", "12", "--d", "6", "--seed", "3")
    assert again["input"]["a"] == rec["input"]["a"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "veronese_hilbert.cli", "hvector", "--a", "2,2,2", "--d", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1 3\n"
