import io
import json
import os
import subprocess
import sys

import pytest

from coxeuler import cli
from coxeuler.tables import CheckReport


def run(*argv, env=None):
    e = dict(os.environ)
    e.pop("COXEULER_CACHE", None)
    e.update(env or {})
    p = subprocess.run(
        [sys.executable, "-m", "coxeuler.cli", *argv], capture_output=True, text=True, env=e
    )
    return p.returncode, p.stdout, p.stderr


def lines(out):
    return [json.loads(s) for s in out.splitlines()]


def test_table_examples():
    code, out, _ = run("table", "--family", "D", "--stat", "sub1", "--n", "4", "--format", "json")
    assert code == 0
    assert lines(out) == [{"family": "D", "statistic": "sub1", "n": 4, "coefficients": ["0", "7", "34", "7"]}]
    code, out, _ = run("table", "--family", "D", "--stat", "eulerian", "--n", "3")
    assert lines(out)[0]["coefficients"] == ["1", "11", "11", "1"]
    code, out, _ = run("table", "--family", "A", "--stat", "eulerian", "--n", "0")
    assert lines(out)[0]["coefficients"] == ["1"]


def test_table_csv():
    code, out, _ = run("table", "--stat", "sub01", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "family,stat,n,k,coefficient",
        "D,sub01,3,0,0", "D,sub01,3,1,0", "D,sub01,3,2,5", "D,sub01,3,3,1",
    ]


def test_sources_agree():
    _, a, _ = run("table", "--stat", "subge2", "--max-n", "7", "--source", "oracle")
    _, b, _ = run("table", "--stat", "subge2", "--max-n", "7", "--source", "recurrence")
    assert a == b


def test_verify_tables_exit_zero():
    code, out, _ = run("verify", "--suite", "tables", "--max-n", "6")
    assert code == 0
    got = lines(out)
    assert len(got) == 20 and all(d["passed"] for d in got)
    assert set(got[0]) == {"suite", "context", "passed", "first_failure"}


def test_verify_errata():
    code, out, _ = run("verify", "--suite", "errata")
    assert code == 0
    text = out
    assert "(5, 2, 754, 802)" in text and "(2, 2, 114, 102)" in text and "'t^1', '-3', '1'" in text


def test_verify_failure_exits_one(monkeypatch):
    def fake(name, bounds):
        yield "tables", CheckReport.ok("fine")
        yield "tables", CheckReport.fail("broken", "n=2 t^1", 1, 2)

    monkeypatch.setattr(cli, "run_suite", fake)
    buf = io.StringIO()
    assert cli.main(["verify", "--suite", "tables"], out=buf) == 1
    got = lines(buf.getvalue())
    assert [d["passed"] for d in got] == [True, False]
    assert got[1]["first_failure"] == {"location": "n=2 t^1", "expected": "1", "actual": "2"}


def test_roots_disagreement_exits_one(monkeypatch):
    monkeypatch.setattr(cli, "bisection_real_root_count", lambda p: -1)
    assert cli.main(["roots", "--n", "3"], out=io.StringIO()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--suite", "hat", "--max-n", "1"),
        ("table", "--family", "A", "--stat", "sub1", "--n", "3"),
        ("table", "--stat", "sub1", "--n", "1"),
        ("table", "--n", "3", "--max-n", "4"),
        ("table",),
        ("verify", "--suite", "nonsense"),
        ("verify", "--format", "csv"),
        ("frobnicate",),
        ("roots", "--n", "0"),
    ],
)
def test_usage_errors_exit_two(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "--family", "B", "--n", "9", "--source", "oracle"),
        ("table", "--n", "41"),
        ("verify", "--suite", "hat", "--max-n", "9"),
        ("verify", "--suite", "hat", "--oracle-bound", "11"),
        ("roots", "--max-n", "50"),
    ],
)
def test_bound_errors_exit_three(argv):
    assert run(*argv)[0] == 3


def test_roots_output():
    code, out, _ = run("roots", "--max-n", "12")
    assert code == 0
    got = lines(out)
    assert [d["n"] for d in got] == list(range(1, 13))
    assert all(d["label"] == "empirical" for d in got)
    by_n = {d["n"]: d for d in got}
    assert by_n[2]["distinct_real_roots"] == 1 and by_n[2]["squarefree_degree"] == 1 and by_n[2]["all_real"]
    assert by_n[3]["distinct_real_roots"] == 3
    assert all(d["bisection_count"] == d["distinct_real_roots"] for d in got)


def test_cache_round_trip_and_determinism(tmp_path):
    cache = tmp_path / "cache.jsonl"
    env = {"COXEULER_CACHE": str(cache)}
    _, first, _ = run("table", "--stat", "sub01", "--max-n", "10", env=env)
    saved = cache.read_bytes()
    assert len(saved.splitlines()) == 9
    _, second, _ = run("table", "--stat", "sub01", "--max-n", "10", env=env)
    assert first == second
    assert cache.read_bytes() == saved
    _, third, _ = run("table", "--stat", "sub01", "--max-n", "10")
    assert third == first
    row6 = [d for d in lines(first) if d["n"] == 6][0]
    assert row6["coefficients"] == ["0", "0", "129", "2132", "3030", "468", "1"]


def test_cache_entries_are_served(tmp_path):
    cache = tmp_path / "cache.jsonl"
    cache.write_text(
        '{"coefficients": ["0", "99"], "family": "D", "n": 2, "source": "oracle", "statistic": "sub1"}\n'
        "garbage line\n"
    )
    code, out, err = run("table", "--stat", "sub1", "--n", "2", "--cache", str(cache))
    assert code == 0
    assert lines(out)[0]["coefficients"] == ["0", "99"]
    assert ":2: skipped corrupt cache line" in err
    # same key under a different source is a different entry
    _, out, _ = run("table", "--stat", "sub1", "--n", "2", "--source", "recurrence", "--cache", str(cache))
    assert lines(out)[0]["coefficients"] == ["0", "1"]


def test_verify_is_byte_deterministic():
    a = run("verify", "--suite", "symmetry", "--max-n", "20")
    b = run("verify", "--suite", "symmetry", "--max-n", "20")
    assert a == b and a[0] == 0
