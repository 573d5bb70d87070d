"""Exit codes and output of the command line front end."""

import pytest

import cyclone.cli as cli
from cyclone import Verdict, WatchdogTimeout, WorkerStats, WorkStats


def test_gen_then_check_round_trip(tmp_path, capsys):
    path = tmp_path / "a.aut"
    assert cli.main(["gen", "lasso:2:3:acc", "-o", str(path)]) == 0
    assert path.read_text().startswith("states 5\n")
    assert cli.main(["check", str(path), "--oracle"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "CYCLE"
    assert out[1] == "stem: 0 1 2"
    assert out[2] == "cycle: 2 3 4"


def test_gen_to_stdout(capsys):
    assert cli.main(["gen", "lasso:1:1:noacc"]) == 0
    assert capsys.readouterr().out.startswith("states ")


def test_check_reports_no_cycle(capsys):
    assert cli.main(["check", "lasso:2:3:noacc", "--alg", "owcty", "--oracle"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "NO-CYCLE"


def test_check_parallel_detector_with_color_dump(tmp_path, capsys):
    dump = tmp_path / "colors.csv"
    code = cli.main([
        "check", "lasso:2:3:noacc", "--alg", "lndfs", "--workers", "2",
        "--dump-colors", str(dump),
    ])
    assert code == 0
    lines = dump.read_text().splitlines()
    assert lines[0] == "state,red,blue,dangerous,count"
    assert len(lines) == 6
    # the full-red postcondition shows up in the dump
    assert all(line.split(",")[1] == "1" for line in lines[1:])


def test_color_dump_needs_a_shared_store(capsys):
    assert cli.main(["check", "lasso:1:1:acc", "--alg", "ndfs", "--dump-colors", "x"]) == 1


def test_usage_errors_exit_one(capsys):
    assert cli.main([]) == 1
    assert cli.main(["check"]) == 1
    assert cli.main(["check", "lasso:1:1:acc", "--alg", "bogus"]) == 1
    assert cli.main(["check", "lasso:1:1:acc", "--workers", "many"]) == 1


def test_missing_input_exits_one(capsys):
    assert cli.main(["check", "/no/such/file.aut"]) == 1
    assert "error" in capsys.readouterr().err


def test_sequential_with_workers_exits_one(capsys):
    assert cli.main(["check", "lasso:1:1:acc", "--alg", "ndfs", "--workers", "4"]) == 1


def test_comparator_ignores_workers(capsys):
    assert cli.main(["check", "lasso:1:1:acc", "--alg", "owcty", "--workers", "4"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "CYCLE"


def test_oracle_disagreement_exits_two(monkeypatch, capsys):
    def denier(aut, *args, **kwargs):
        return Verdict(None, WorkStats([WorkerStats()], 0.0))

    monkeypatch.setattr(cli, "execute", denier)
    assert cli.main(["check", "lasso:2:3:acc", "--oracle"]) == 2


def test_watchdog_timeout_exits_three(monkeypatch, capsys):
    def hang(aut, *args, **kwargs):
        raise WatchdogTimeout("too slow")

    monkeypatch.setattr(cli, "execute", hang)
    assert cli.main(["check", "lasso:2:3:acc"]) == 3
    assert "timeout" in capsys.readouterr().err


def test_bench_writes_records_and_aggregates(tmp_path, capsys):
    rec = tmp_path / "rec.csv"
    agg = tmp_path / "agg.csv"
    code = cli.main([
        "bench", "lasso:2:3:acc", "random:30:2.0:0.2:1",
        "--algs", "ndfs,swarm,owcty", "--workers", "1,2",
        "--repeats", "2", "--oracle", "-o", str(rec), "--aggregate", str(agg),
    ])
    assert code == 0
    lines = rec.read_text().splitlines()
    assert lines[0].startswith("input,alg,workers,")
    # 2 inputs x (ndfs@1 + swarm@1 + swarm@2 + owcty@1) x 2 repeats
    assert len(lines) == 1 + 16
    assert agg.read_text().splitlines()[0] == "input,alg,workers,runs,mean_wall_s,speedup"


def test_dist_reads_bench_csv_and_plain_files(tmp_path, capsys):
    rec = tmp_path / "rec.csv"
    assert cli.main(["bench", "lasso:2:3:acc", "--algs", "ndfs", "--repeats", "3",
                     "-o", str(rec)]) == 0
    capsys.readouterr()
    assert cli.main(["dist", str(rec), "--n", "1,4", "--alg", "ndfs"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("N=1 expected=")
    assert out[1].startswith("N=4 expected=")

    raw = tmp_path / "times.txt"
    raw.write_text("2.0\n4.0\n")
    assert cli.main(["dist", str(raw), "--n", "2"]) == 0
    assert capsys.readouterr().out.startswith("N=2 expected=2.500000")


def test_dist_writes_model_table_csv(tmp_path, capsys):
    raw = tmp_path / "times.txt"
    raw.write_text("2.0\n4.0\n")
    out = tmp_path / "model.csv"
    assert cli.main(["dist", str(raw), "--n", "1,2", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,expected_min,stddev,speedup"
    assert lines[1].startswith("1,3.000000000,")
    assert lines[2].startswith("2,2.500000000,")
    # speedup column for n=2 is em(1)/em(2) = 3/2.5
    assert lines[2].endswith("1.200000")


def test_dist_with_no_matching_rows_exits_one(tmp_path, capsys):
    rec = tmp_path / "rec.csv"
    assert cli.main(["bench", "lasso:2:3:acc", "--algs", "ndfs", "-o", str(rec)]) == 0
    capsys.readouterr()
    assert cli.main(["dist", str(rec), "--alg", "lndfs"]) == 1
