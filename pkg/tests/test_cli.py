import json

import pytest

import hypermaps.cli as cli
from hypermaps.cli import main, parse_config
from hypermaps.interpolate import CoeffTable
from hypermaps.reference import APPENDIX_TABLES


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("HYPERMAP_THREADS", raising=False)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--darts", "2", "--format", "csv", "--threads", "1")
    assert code == 0
    assert out == "v,e,f,count\n1,1,2,1\n"


def test_table_csv_order(capsys):
    code, out, _ = run(capsys, "table", "-r", "6", "--threads", "1", "--quiet")
    rows = [tuple(map(int, line.split(","))) for line in out.splitlines()[1:]]
    assert rows == sorted(rows)
    assert all(v <= e <= f for v, e, f, _ in rows)


def test_table_walsh_matches_printed_block(capsys):
    code, out, _ = run(capsys, "table", "--darts", "5", "--format", "walsh", "--threads", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r=5:"
    rows = [tuple(int(x) for x in line.replace("|", " ").split()) for line in lines[3:]]
    assert rows == list(APPENDIX_TABLES[5])
    assert len({len(line) for line in lines[1:]}) == 1


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "-r", "4", "--format", "json", "--threads", "1")
    doc = json.loads(out)
    assert doc["darts"] == 4
    assert doc["total"] == "71"
    assert doc["entries"][0] == {"v": 1, "e": 1, "f": 2, "count": "5"}
    assert all(isinstance(e["count"], str) for e in doc["entries"])


def test_table_writes_default_cache(capsys, in_tmp):
    run(capsys, "table", "-r", "3", "--threads", "1")
    assert (in_tmp / ".fcache").exists()
    code, out, _ = run(capsys, "cache")
    assert "values at 10 points" in out
    _, _, err = run(capsys, "table", "-r", "3", "--threads", "1")
    assert "0 computed, 10 from cache" in err
    run(capsys, "cache", "--clear")
    assert not (in_tmp / ".fcache").exists()


def test_no_cache_flag(capsys, in_tmp):
    run(capsys, "table", "-r", "3", "--no-cache", "--threads", "1")
    assert not (in_tmp / ".fcache").exists()


@pytest.mark.parametrize("r", [1, 4])
def test_verify_ok(capsys, r):
    code, out, _ = run(capsys, "verify", "--darts", str(r), "--threads", "1")
    assert code == 0
    assert out.startswith(f"verify r={r}: OK")


def test_verify_unknown_darts(capsys):
    code, _, err = run(capsys, "verify", "--darts", "9")
    assert code == 2
    assert "no reference table" in err


@pytest.mark.parametrize(
    "entries,fragment",
    [
        ({(1, 1, 2): 5, (2, 2, 2): 17, (1, 2, 3): 6, (1, 1, 4): 2}, "(1, 1, 4): computed 1, reference 2"),
        ({(1, 1, 2): 5, (2, 2, 2): 17, (1, 2, 3): 6}, "(1, 1, 4): computed 1, reference None"),
        ({(1, 1, 2): 5, (2, 2, 2): 17, (1, 2, 3): 6, (1, 1, 4): 1, (1, 1, 6): 1}, "(1, 1, 6): computed None"),
    ],
)
def test_verify_reports_first_mismatch(capsys, monkeypatch, entries, fragment):
    monkeypatch.setattr(cli, "reference_table", lambda r: CoeffTable(r, entries))
    code, out, _ = run(capsys, "verify", "-r", "4", "--threads", "1")
    assert code == 1
    assert "MISMATCH" in out and fragment in out


def test_oracle_ok_and_guard(capsys):
    code, out, _ = run(capsys, "oracle", "--darts", "3", "--threads", "1")
    assert code == 0 and "OK" in out
    code, _, err = run(capsys, "oracle", "--darts", "12")
    assert code == 2 and "--force" in err
    code, _, _ = run(capsys, "oracle", "--darts", "7", "--force", "--threads", "1", "--quiet")
    assert code == 0


def test_oracle_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli, "brute_force_table", lambda r, workers=1: CoeffTable(r, {(1, 1, 1): 2}))
    code, out, _ = run(capsys, "oracle", "-r", "3", "--threads", "1")
    assert code == 1 and "brute force" in out


def test_totals(capsys):
    code, out, _ = run(capsys, "totals", "--max", "5")
    assert code == 0 and out.split() == ["1", "3", "13", "71", "461"]
    assert run(capsys, "totals", "--max", "1")[1] == "1\n"


def test_internal_failure_exit_code(capsys, monkeypatch):
    from hypermaps.henum import NonIntegerResult

    def broken(*args, **kwargs):
        raise NonIntegerResult("H_2(1,1,1) = 1/2")

    monkeypatch.setattr(cli, "compute_table", broken)
    code, _, err = run(capsys, "table", "-r", "2")
    assert code == 3 and "internal consistency failure" in err


def test_bad_arguments(capsys):
    assert main(["table", "--darts", "0"]) == 2
    assert main(["table", "--darts", "3", "--threads", "0"]) == 2
    with pytest.raises(SystemExit):
        main(["table"])


def test_thread_defaults(monkeypatch):
    monkeypatch.setenv("HYPERMAP_THREADS", "3")
    assert parse_config(["table", "-r", "2"]).threads == 3
    assert parse_config(["table", "-r", "2", "--threads", "5"]).threads == 5
    monkeypatch.setenv("HYPERMAP_THREADS", "lots")
    assert parse_config(["table", "-r", "2"]).threads >= 1
