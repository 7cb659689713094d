"""End-to-end command line coverage through main(argv)."""

import json
import math
import os

import numpy as np
import pytest

from fracdim.cli import calibration_sets, calibration_suite, main
from fracdim.pointset import read_points

LOG2_OVER_LOG3 = math.log(2.0) / math.log(3.0)


def test_gen_cantor_json(tmp_path, capsys):
    out = str(tmp_path / "c.json")
    assert main(["gen", "cantor", "--level", "3", "-o", out]) == 0
    assert "wrote 8 points" in capsys.readouterr().out
    ps = read_points(out)
    assert ps.size == 8 and ps.label == "cantor-3"


def test_gen_example_e_csv(tmp_path):
    out = str(tmp_path / "e.csv")
    assert main(["gen", "example-e", "--n-max", "100", "-o", out]) == 0
    ps = read_points(out)
    assert ps.size == sum(n + 1 for n in range(2, 101)) == 5148


def test_gen_ek_two_points(tmp_path):
    out = str(tmp_path / "ek.csv")
    assert main(["gen", "ek", "--k", "2", "--n-max", "1", "-o", out]) == 0
    ps = read_points(out)
    assert np.array_equal(np.sort(ps.points[:, 0]), [0.0, 1.0])


def test_gen_requires_out():
    with pytest.raises(SystemExit):
        main(["gen", "cantor", "--level", "3"])


def test_gen_extension_from_format(tmp_path):
    base = str(tmp_path / "g")
    assert main(["gen", "uniform-grid", "--count", "10", "-o", base,
                 "--format", "csv"]) == 0
    assert os.path.exists(base + ".csv")


def test_roundtrip_through_cli_is_bit_exact(tmp_path):
    a = str(tmp_path / "a.csv")
    b = str(tmp_path / "b.json")
    main(["gen", "poly", "--p", "1.5", "--n-max", "500", "-o", a])
    first = read_points(a)
    from fracdim.pointset import write_points
    write_points(first, b)
    assert np.array_equal(read_points(b).points, first.points)


def test_boxdim_cantor(tmp_path, capsys):
    src = str(tmp_path / "c.json")
    main(["gen", "cantor", "--level", "10", "-o", src])
    assert main(["boxdim", src]) == 0
    out = capsys.readouterr().out
    assert "box_dim 0.630930" in out


def test_boxdim_empty_warns(tmp_path, capsys):
    src = str(tmp_path / "empty.csv")
    open(src, "w").write("# nothing\n")
    assert main(["boxdim", src]) == 0
    captured = capsys.readouterr()
    assert "box_dim 0.000000" in captured.out
    assert "warning" in captured.err


def test_boxdim_writes_json(tmp_path):
    src = str(tmp_path / "c.json")
    main(["gen", "cantor", "--level", "10", "-o", src])
    base = str(tmp_path / "box")
    main(["boxdim", src, "-o", base])
    doc = json.load(open(base + ".json"))
    assert doc["value"] == pytest.approx(LOG2_OVER_LOG3, abs=1e-9)
    assert os.path.exists(base + "_cover.csv")


def test_spectrum_single_theta(tmp_path, capsys):
    src = str(tmp_path / "ek.csv")
    main(["gen", "ek", "--k", "2", "--n-max", "300", "-o", src])
    assert main(["spectrum", src, "--theta", "0.5"]) == 0
    assert "value=" in capsys.readouterr().out


def test_spectrum_infeasible_theta_exits_nonzero(tmp_path, capsys):
    src = str(tmp_path / "c.json")
    main(["gen", "cantor", "--level", "3", "-o", src])
    assert main(["spectrum", src, "--theta", "0.5"]) == 1
    assert "error" in capsys.readouterr().err


def test_gbdim_pinned_keys(tmp_path, capsys):
    src = str(tmp_path / "c.json")
    main(["gen", "cantor", "--level", "12", "-o", src])
    capsys.readouterr()
    assert main(["gbdim", src]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert sorted(doc) == ["consistent", "lower", "point", "theta_min",
                           "upper"]
    assert doc["consistent"] is True


def test_gbstar_lines(capsys):
    assert main(["gbstar", "--family", "example-e",
                 "--radii", "5,10,20"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert "restricted_size=13" in lines[0]
    assert "restricted_size=53" in lines[1]
    assert "restricted_size=208" in lines[2]


def test_verify_gubr_exit_zero(capsys):
    assert main(["verify", "gubr", "--n", "2..100"]) == 0
    assert "99/99 checks passed" in capsys.readouterr().out


def test_verify_egb(capsys):
    assert main(["verify", "egb", "--k", "2,3", "--n-max", "100"]) == 0
    out = capsys.readouterr().out
    assert "checks passed" in out


def test_verify_count_laws_jsonl(tmp_path, capsys):
    out = str(tmp_path / "laws.jsonl")
    assert main(["verify", "count-laws", "--seed", "7", "--trials", "10",
                 "-o", out]) == 0
    lines = open(out).read().splitlines()
    assert len(lines) == 10
    docs = [json.loads(ln) for ln in lines]
    assert all(d["passed"] for d in docs)
    assert sorted(d["check_id"] for d in docs) == \
        [d["check_id"] for d in docs]


def test_verify_chain_and_zero_on_small_sets(capsys):
    assert main(["verify", "chain", "--set", "cantor-12",
                 "--set", "singleton", "--set", "empty"]) == 0
    assert main(["verify", "zero", "--set", "cantor-12",
                 "--set", "grid-1024"]) == 0


def test_calibration_registry():
    names = set(calibration_sets())
    assert {"cantor-12", "poly-1-100000", "poly-2-100000", "ek-2-1000",
            "ek-3-1000", "e-2000", "grid-1024", "singleton",
            "empty"} == names
    # builders are lazy; realize only the cheap ones here
    assert calibration_sets()["singleton"]().size == 1
    assert calibration_sets()["empty"]().size == 0


def test_report_files_and_determinism(tmp_path, capsys):
    base1 = str(tmp_path / "r1" / "cantor")
    base2 = str(tmp_path / "r2" / "cantor")
    assert main(["report", "--set", "cantor-12", "-o", base1]) == 0
    assert main(["report", "--set", "cantor-12", "-o", base2,
                 "--threads", "2"]) == 0
    for suffix in (".json", "_cover.csv", "_spectrum.csv",
                   "_checks.jsonl", "_cover.png", "_spectrum.png"):
        assert os.path.exists(base1 + suffix)
    # delimited outputs are byte-identical across thread counts
    for suffix in (".json", "_cover.csv", "_spectrum.csv",
                   "_checks.jsonl"):
        b1 = open(base1 + suffix, "rb").read()
        b2 = open(base2 + suffix, "rb").read()
        assert b1 == b2
    doc = json.load(open(base1 + ".json"))
    assert "threads" not in json.dumps(doc["config"])
    assert doc["timing"] is None


def test_report_from_file_input(tmp_path):
    src = str(tmp_path / "c.json")
    main(["gen", "cantor", "--level", "12", "-o", src])
    base = str(tmp_path / "rep")
    assert main(["report", src, "-o", base, "--no-plots"]) == 0
    doc = json.load(open(base + ".json"))
    assert doc["config"]["source"]["kind"] == "file"
    assert not os.path.exists(base + "_cover.png")


def test_report_requires_out():
    with pytest.raises(SystemExit):
        main(["report", "--set", "cantor-12"])


def test_threads_env_fallback(tmp_path, monkeypatch):
    base1 = str(tmp_path / "env" / "r")
    base2 = str(tmp_path / "flag" / "r")
    monkeypatch.setenv("FRACDIM_THREADS", "2")
    assert main(["report", "--set", "cantor-12", "-o", base1]) == 0
    monkeypatch.delenv("FRACDIM_THREADS")
    assert main(["report", "--set", "cantor-12", "-o", base2]) == 0
    assert open(base1 + ".json", "rb").read() == \
        open(base2 + ".json", "rb").read()


def test_calibration_suite_covers_registry():
    suite = calibration_suite()
    assert len(suite) == len(calibration_sets())
