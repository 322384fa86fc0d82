import json

import pytest

from colorcomp import CountTable
from colorcomp.checks import VerifyReport
from colorcomp.cli import main, read_b_file
from colorcomp.recurrence import CoeffTriangle, RecurrenceReport, RecurrenceSpec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["count", "--family", "catalan", "--n", "3"], "10"),
        (["count", "--family", "constant", "--p", "1", "--n", "0"], "1"),
        (["count", "--family", "matrix", "--k-rows", "2", "--n", "2"], "7"),
        (["count", "--family", "catalan", "--n", "3", "--k", "2"], "4"),
        (["total", "--family", "constant", "--p", "2", "--n", "3"], "18"),
        (["closed", "--family", "binom_row", "--p", "2", "--n", "4", "--k", "2"], "6"),
        (["closed", "--family", "matrix", "--k-rows", "2", "--n", "4"], "absent"),
    ],
)
def test_scalar_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("oracle", ["dp", "enum", "series", "closed"])
@pytest.mark.parametrize("k", [None, 1, 2, 4])
def test_oracles_agree(capsys, oracle, k):
    base = ["count", "--family", "catalan", "--n", "6"] + ([] if k is None else ["--k", str(k)])
    code, out, _ = run(capsys, *base, "--oracle", oracle)
    assert code == 0
    assert out == run(capsys, *base)[1]


def test_closed_oracle_absent_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "--family", "matrix", "--k-rows", "2", "--n", "3", "--oracle", "closed")
    assert code == 2 and "no closed form" in err


def test_table_text_catalan(capsys):
    code, out, _ = run(capsys, "table", "--family", "catalan", "--n-max", "4")
    assert code == 0
    last = out.strip().splitlines()[-1].split()
    assert last == ["4", "14", "14", "6", "1", "35"]


def test_table_csv_and_single_row(capsys):
    _, out, _ = run(capsys, "table", "--family", "constant", "--p", "1", "--n-max", "3", "--format", "csv")
    assert out.strip().splitlines()[-1] == "3,1,2,1,4"
    _, out, _ = run(capsys, "table", "--family", "linear", "--m", "5", "--n-max", "1", "--format", "csv")
    assert out.strip().splitlines() == ["n,k=1,total", "1,5,5"]


def test_table_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--family", "catalan", "--n-max", "8", "--format", "json")
    data = json.loads(out)
    table = CountTable.from_json(data)
    assert table.to_json() == data
    assert table.totals[8] == 6435
    assert all(isinstance(v, str) for v in data["totals"])


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--family", "constant", "--p", "1", "--n", "3")
    assert len(out.splitlines()) == 4
    _, out, _ = run(capsys, "enumerate", "--family", "catalan", "--n", "0")
    assert [json.loads(l) for l in out.splitlines()] == [{"parts": []}]
    _, out, _ = run(capsys, "enumerate", "--family", "catalan", "--n", "2")
    assert [json.loads(l)["parts"] for l in out.splitlines()] == [[[2, 1]], [[2, 2]], [[1, 1], [1, 1]]]
    _, out, _ = run(capsys, "enumerate", "--family", "catalan", "--n", "5", "--limit", "3")
    assert len(out.splitlines()) == 3
    _, out, _ = run(capsys, "enumerate", "--family", "matrix", "--k-rows", "2", "--n", "2", "--matrices")
    assert len(out.splitlines()) == 7 and all("columns" in json.loads(l) for l in out.splitlines())


def test_recurrence_commands(capsys):
    code, out, _ = run(capsys, "recurrence", "--p", "1", "--q", "1", "--show", "coeffs")
    assert code == 0 and out.splitlines() == ["[-1, 3]", "order 2"]
    _, out, _ = run(capsys, "recurrence", "--p", "1", "--q", "0", "--show", "coeffs")
    assert out.splitlines()[0] == "[2]"
    code, out, _ = run(capsys, "recurrence", "--p", "2", "--q", "3", "--show", "verify", "--n-hi", "40")
    assert code == 0 and out.splitlines()[-1].startswith("pass")


def test_recurrence_json_round_trips(capsys):
    _, out, _ = run(capsys, "recurrence", "--p", "3", "--q", "2", "--show", "triangle", "--format", "json")
    assert CoeffTriangle.from_json(json.loads(out)).to_json() == json.loads(out)
    _, out, _ = run(capsys, "recurrence", "--p", "3", "--q", "2", "--show", "coeffs", "--format", "json")
    assert RecurrenceSpec.from_json(json.loads(out)).to_json() == json.loads(out)
    _, out, _ = run(capsys, "recurrence", "--p", "3", "--q", "2", "--show", "verify", "--format", "json")
    assert RecurrenceReport.from_json(json.loads(out)).to_json() == json.loads(out)


def test_verify_selected(capsys):
    code, out, _ = run(capsys, "verify", "--only", "kb", "--n-max", "12", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [c["name"] for c in data["checks"]] == ["kb"]
    assert VerifyReport.from_json(data).to_json() == data


def test_verify_literal_bound_is_expected_failure(capsys):
    code, out, _ = run(capsys, "verify", "--only", "final-corollary", "--bound", "paper", "--format", "json")
    check = json.loads(out)["checks"][0]
    assert code == 0
    assert check["status"] == "xfail"
    assert any(f.startswith("n=3: 3 != c_3 = 5") for f in check["failures"])


@pytest.mark.parametrize(
    "argv,code",
    [
        (["count", "--family", "constant", "--n", "3"], 2),
        (["count", "--family", "constant", "--p", "1", "--q", "2", "--n", "3"], 2),
        (["count", "--family", "bogus", "--n", "3"], 2),
        (["count", "--family", "constant", "--p", "1", "--n", "-1"], 2),
        (["count", "--family", "custom", "--n", "3"], 2),
        (["count", "--family", "constant", "--p", "1", "--n", "30", "--oracle", "enum"], 3),
        (["enumerate", "--family", "constant", "--p", "1", "--n", "26"], 3),
        (["enumerate", "--family", "catalan", "--n", "2", "--matrices"], 2),
        (["recurrence", "--p", "0", "--q", "1"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_flag_named_in_error(capsys):
    _, _, err = run(capsys, "count", "--family", "matrix", "--n", "3")
    assert "--k-rows" in err


def test_dp_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("COLORCOMP_MAX_N", "10")
    assert run(capsys, "count", "--family", "catalan", "--n", "11")[0] == 3


def test_custom_b_file(tmp_path, capsys):
    text = tmp_path / "b.txt"
    text.write_text("# two types of 1\n2 1\n1 1 # more\n")
    assert read_b_file(text) == [2, 1, 1, 1]
    js = tmp_path / "b.json"
    js.write_text("[2, 1, 1, 1]")
    assert read_b_file(js) == [2, 1, 1, 1]
    _, a, _ = run(capsys, "count", "--family", "custom", "--b-file", str(text), "--n", "4")
    _, b, _ = run(capsys, "count", "--family", "custom", "--b-file", str(js), "--n", "4", "--oracle", "enum")
    assert a == b
    bad = tmp_path / "bad.txt"
    bad.write_text("1 -2")
    assert run(capsys, "count", "--family", "custom", "--b-file", str(bad), "--n", "4")[0] == 2


def test_deterministic_output(capsys):
    argv = ["table", "--family", "figured", "--p", "2", "--n-max", "10", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
