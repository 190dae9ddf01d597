import csv
import io
import json
import subprocess
import sys

import pytest

from invgb import Form, InverseForm, SequenceRecord, viable_pair_seq
from invgb import cli
from invgb.bench import mult_bound, ratios, run_bench
from invgb.errors import InvariantError
from invgb.field import gf2, parse_field
from invgb.oracle import ideal_equal

WORKED_SEQ = "1,0,0,1,1,0,1,0"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pair_examples(capsys):
    code, out, _ = run(capsys, "pair", "--field", "gf2", "--seq", WORKED_SEQ)
    assert code == 0
    assert out == "f = (x^4 + x*z^3 + z^4, x^3*z^2 + x^2*z^3 + x*z^4 + z^5)\n"
    code, out, _ = run(capsys, "pair", "--field", "q", "--seq", "2,1,2", "--reduced")
    assert code == 0
    assert out.splitlines()[-1] == "reduced = x^2 - z^2, x*z - 1/2*z^2, z^3"
    code, out, _ = run(capsys, "pair", "--field", "gf2", "--seq", "0,0,0")
    assert (code, out) == (0, "f = (1, 0)\n")


def test_pair_accepts_inverse_forms(capsys):
    code, out, _ = run(capsys, "pair", "--invform", "m=-7; F=0,1,0,1,1,0,0,1")
    assert code == 0
    assert out.startswith("f = (x^4 + x*z^3 + z^4, ")


def test_pair_trace_and_csv(capsys):
    code, out, _ = run(capsys, "pair", "--seq", WORKED_SEQ, "--trace")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[-1].startswith("f = (x^4")
    assert "B=1" in lines[-2] and lines[-2].split()[0] == "8"
    code, out, _ = run(capsys, "pair", "--seq", WORKED_SEQ, "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["i", "q", "d", "B", "f1", "f2"]
    assert [r[0] for r in rows[1:]] == [str(k) for k in range(1, 9)]
    assert rows[-1][4:] == ["x^4 + x*z^3 + z^4", "x^3*z^2 + x^2*z^3 + x*z^4 + z^5"]


def test_pair_json_round_trips(capsys):
    code, out, _ = run(capsys, "pair", "--seq", WORKED_SEQ, "--json", "--reduced")
    assert code == 0
    data = json.loads(out)
    K = gf2()
    s = SequenceRecord.parse(WORKED_SEQ, K)
    f = viable_pair_seq(s)
    assert (Form.parse(data["f1"], K), Form.parse(data["f2"], K)) == (f.f1, f.f2)
    assert data["lc"] == 4 and data["lc_profile"] == [1, 1, 1, 3, 3, 3, 4, 4]
    assert (data["mu"], data["mu_prime"]) == ("x^4 + x + 1", "x^3 + x^2 + x + 1")
    assert data["degree_vector"] == [-7, -5, -2, 1]
    assert [str(Form.parse(g, K)) for g in data["form_vector"]] == data["form_vector"]
    assert data["dimension"] == 20 and data["lambda"] == 4
    assert len(data["reduced"]) == 4


def test_gb_rgb_and_lc(capsys):
    code, out, _ = run(capsys, "gb", "--seq", WORKED_SEQ)
    lines = out.splitlines()
    assert code == 0
    assert lines == ["F1 = x^4 + x*z^3 + z^4", "F2 = x^3*z^2 + x^2*z^3 + x*z^4 + z^5",
                     "F3 = x*z^5", "F4 = z^8", "N = (-7, -5, -2, 1)"]
    code, out, _ = run(capsys, "rgb", "--field", "q", "--seq", "2,1,2", "--json")
    assert json.loads(out) == ["x^2 - z^2", "x*z - 1/2*z^2", "z^3"]
    assert run(capsys, "lc", "--seq", WORKED_SEQ, "--profile")[1] == "1,1,1,3,3,3,4,4\n"
    assert run(capsys, "lc", "--seq", WORKED_SEQ)[1] == "4\n"
    data = json.loads(run(capsys, "lc", "--seq", WORKED_SEQ, "--json")[1])
    assert set(data) == {"lc", "lc_profile", "mu", "mu_prime", "f1", "f2"}
    assert run(capsys, "lc", "--invform", "m=-7; F=0,1,0,1,1,0,0,1")[1] == "4\n"


def test_gb_json_round_trips_into_inverse_form_results(capsys):
    code, out, _ = run(capsys, "gb", "--field", "gfp:7", "--invform", "m=-3; F=2,0,5,1", "--json")
    assert code == 0
    data = json.loads(out)
    F7 = parse_field("gfp:7")
    basis = [Form.parse(g, F7) for g in data["form_vector"]]
    assert [str(g) for g in basis] == data["form_vector"]
    F = InverseForm.parse("m=-3; F=2,0,5,1", F7)
    assert InverseForm.from_json(json.dumps(F.to_json())) == F


def test_file_and_stdin_input(capsys, tmp_path, monkeypatch):
    path = tmp_path / "batch.txt"
    path.write_text("# two items\n1,0,0,1\n\nm=-2; F=1,1,1\n")
    code, out, _ = run(capsys, "lc", "--file", str(path))
    assert code == 0 and out.split() == ["3", "1"]
    monkeypatch.setattr(sys, "stdin", io.StringIO(WORKED_SEQ + "\n"))
    code, out, _ = run(capsys, "lc", "--file", "-")
    assert (code, out) == (0, "4\n")


def test_intersect(capsys):
    code, out, _ = run(capsys, "intersect", "--seq", "1,0,0,1,1,1", "--seq", "1,0,0,0,1,0,0,1")
    assert code == 0
    K = gf2()
    got = [Form.parse(line, K) for line in out.splitlines()]
    expect = [Form.parse(t, K) for t in ("x^6 + x^3*z^3 + x^2*z^4", "x^4*z + x*z^4 + z^5", "x*z^4")]
    assert ideal_equal(got, expect)
    code, out, _ = run(capsys, "intersect", "--seq", "1,1", "--seq", "1,0", "--json")
    assert code == 0 and isinstance(json.loads(out), list)
    assert run(capsys, "intersect", "--seq", "1,1")[0] == 2


@pytest.mark.parametrize("argv", [
    ["pair", "--field", "gfp:8", "--seq", "1"],
    ["pair", "--field", "reals", "--seq", "1"],
    ["pair", "--seq", "1,x,0"],
    ["pair", "--seq", "1", "--invform", "m=0; F=1"],
    ["pair"],
    ["pair", "--file", "/nonexistent/input.txt"],
    ["pair", "--invform", "m=-2; F=1"],
    ["gb", "--seq", "0,0"],
    ["lc", "--field", "q", "--seq", "1/0"],
])
def test_input_errors_exit_with_status_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_argument_errors_exit_with_status_two(capsys):
    for argv in (["frobnicate"], ["pair", "--bogus"], []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_internal_failures_exit_with_status_three(capsys, monkeypatch):
    def broken(*_args, **_kwargs):
        raise InvariantError("form vector degrees out of order")

    monkeypatch.setattr(cli, "viable_pair_seq", broken)
    code, _, err = run(capsys, "pair", "--seq", WORKED_SEQ)
    assert code == 3 and "form vector degrees" in err

    def crash(*_args, **_kwargs):
        raise KeyError("unexpected")

    monkeypatch.setattr(cli, "viable_pair_seq", crash)
    assert run(capsys, "pair", "--seq", WORKED_SEQ)[0] == 3


def test_verify_runs_small(capsys):
    code, out, _ = run(capsys, "verify", "--scale", "0.02", "--seed", "5")
    lines = out.splitlines()
    assert code == 0 and lines
    assert all(line.startswith("PASS ") and "seed=5" in line for line in lines)


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "32,64", "--repeats", "2")
    assert code == 0
    assert "time(64)/time(32) = " in out
    code, out, _ = run(capsys, "bench", "--sizes", "16,32", "--repeats", "1", "--json")
    data = json.loads(out)
    assert [r["n"] for r in data["rows"]] == [16, 32]
    assert set(data["ratios"]) == {"16->32"}


def test_bench_counts_stay_under_the_bound():
    assert mult_bound(8) == 2 * 9 + 36
    rows = run_bench(sizes=(64, 128, 256), seed=3, repeats=1)
    for r in rows:
        assert 0 < r.mults <= r.bound
        assert r.seconds > 0
    assert set(ratios(rows)) == {(64, 128), (128, 256)}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "invgb", "lc", "--seq", WORKED_SEQ, "--profile"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "1,1,1,3,3,3,4,4\n"
    proc = subprocess.run([sys.executable, "-m", "invgb", "pair", "--field", "gfp:9", "--seq", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
