"""Witness records, counting laws, and estimator-chain checks."""

import json
import math
from dataclasses import fields

import numpy as np
import pytest

from oracles import FROZEN
from fracdim.pointset import make_pointset
from fracdim.setgen import gen_cantor_midpoints, gen_poly_sequence, \
    gen_uniform_grid
from fracdim.spectra import spectrum_sweep
from fracdim.verify import (CheckReport, WitnessRecord, check_chain,
                            check_count_laws, check_count_laws_random,
                            check_zero_equivalences, egb_identity_error,
                            run_egb_suite, run_gubr_suite, witness_egb,
                            witness_gubr, write_check_reports)

TAU = 0.05
EPS = 0.1
THETA_TOL = 1e-10


@pytest.fixture(scope="module")
def c12():
    return gen_cantor_midpoints(12)


@pytest.fixture(scope="module")
def c12_curve(c12):
    return spectrum_sweep(c12)


def test_witness_gubr_frozen_counts():
    for n, expected in FROZEN["witness_count"].items():
        rec = witness_gubr(n, 12)
        assert rec.count == expected
        assert rec.passed
        assert rec.bound == n / 3.0
        assert abs(rec.theta_effective - 1.0 / n) <= THETA_TOL / n
        assert rec.r <= rec.R
        assert rec.example_id == "gubr" and rec.k is None


def test_witness_gubr_validation():
    with pytest.raises(ValueError):
        witness_gubr(1, 10)
    with pytest.raises(ValueError):
        witness_gubr(11, 10)


def test_run_gubr_suite_all_pass():
    recs = run_gubr_suite(60)
    assert len(recs) == 59
    assert all(r.passed for r in recs)
    # counts exceed the n/3 bound with real margin, not by luck
    assert min(r.count - r.bound for r in recs) > 0.5


def test_egb_identity_error_small():
    worst = max(egb_identity_error(k, n)
                for k in (2, 3, 5, 10) for n in range(2, 2001))
    assert worst <= 1e-12


def test_witness_egb():
    rec = witness_egb(2, 10, 100)
    assert rec.passed
    assert rec.example_id == "egb" and rec.k == 2
    assert rec.x == 0.0
    assert abs(rec.theta_effective - 0.5) <= THETA_TOL
    with pytest.raises(ValueError):
        witness_egb(2, 1, 100)
    with pytest.raises(ValueError):
        witness_egb(2, 101, 100)


def test_run_egb_suite():
    recs = run_egb_suite([2, 3], 100)
    assert len(recs) == 6  # n in {2, 10, 100} per k
    assert all(r.passed for r in recs)
    assert {r.k for r in recs} == {2, 3}


def test_check_count_laws_crafted_pair():
    # meshes keep quotients away from cell edges: the a=10 equivariance
    # leg rescales coordinates inexactly, unlike the binary factors
    e = gen_uniform_grid(50)
    f = gen_poly_sequence(1, 30)
    rep = check_count_laws(e, f, [0.29, 0.047, 0.0069])
    assert rep.passed and rep.observed[0] == 0
    assert rep.tolerance == 0.0


def test_check_count_laws_nested_pair():
    f = gen_uniform_grid(40)
    e = make_pointset(f.points[::3], label="sub")
    rep = check_count_laws(e, f, [0.19, 0.031], nested=True)
    assert rep.passed


def test_check_count_laws_random_deterministic():
    a = check_count_laws_random(seed=7, trials=10)
    b = check_count_laws_random(seed=7, trials=10)
    assert all(r.passed for r in a)
    assert [r.check_id for r in a] == [r.check_id for r in b]
    assert [r.observed for r in a] == [r.observed for r in b]
    assert [r.inputs for r in a] == [r.inputs for r in b]


def test_check_chain_cantor(c12, c12_curve):
    rep = check_chain(c12, tau=TAU, curve=c12_curve)
    assert rep.passed
    assert rep.check_id == "chain_cantor-12"
    worst_box, env_mono, bracket_gap, worst_interp, clamp_ok = rep.observed
    assert worst_box <= TAU
    assert env_mono is True and clamp_ok is True
    assert bracket_gap <= TAU
    assert worst_interp <= TAU


def test_check_chain_degenerate_sets():
    for ps in (make_pointset([], label="empty"),
               make_pointset([0.5], label="one")):
        assert check_chain(ps, tau=TAU).passed


def test_check_zero_equivalences_nonvacuous(c12, c12_curve):
    rep = check_zero_equivalences(c12, eps=EPS, curve=c12_curve)
    assert rep.passed
    point, quasi, eps_prime, env_violations = rep.observed
    # both sides exceed their thresholds, so the pass is not vacuous
    assert point > EPS and quasi > eps_prime
    assert env_violations == 0


def test_check_zero_equivalences_zero_side():
    rep = check_zero_equivalences(make_pointset([0.5], label="one"))
    assert rep.passed
    assert rep.observed[0] == 0.0 and rep.observed[1] == 0.0


def test_check_zero_equivalences_vacuous():
    tiny = gen_cantor_midpoints(3)
    rep = check_zero_equivalences(tiny)
    assert rep.passed and rep.observed == []


def test_check_report_json_keys():
    rep = CheckReport(check_id="x", inputs="i", expected="e",
                      observed=[1], tolerance=0.0, passed=True)
    assert sorted(rep.to_json_dict()) == [
        "check_id", "expected", "observed", "passed", "tolerance",
        "witness"]


def test_write_check_reports_sorted_jsonl(tmp_path):
    reps = [CheckReport(check_id=f"c_{i}", inputs="", expected="",
                        observed=[], tolerance=0.0, passed=True)
            for i in (3, 1, 2)]
    path = str(tmp_path / "checks.jsonl")
    write_check_reports(reps, path)
    lines = open(path).read().splitlines()
    docs = [json.loads(ln) for ln in lines]
    assert [d["check_id"] for d in docs] == ["c_1", "c_2", "c_3"]


def test_witness_record_fields():
    names = [f.name for f in fields(WitnessRecord)]
    assert names == ["example_id", "n", "k", "x", "R", "r",
                     "theta_effective", "count", "bound", "passed"]
