import json

import pytest

import khl

QXY = {"kind": "graded_poly", "base": "Q", "vars": ["x", "y"]}


def test_suites_listed():
    names = khl.suite_names()
    assert "thm32" in names and "ex66_conjecture" in names
    assert len(names) == 14


def test_minimal_scenario():
    report = khl.run_scenario({"suite": "thm32", "ring": {"kind": "integers"}, "ideal": ["2"], "rank": 2, "n": 2})
    assert report["status"] == "pass"
    assert [c["status"] for c in report["checks"]] == ["pass"] * 3
    assert list(report) == ["version", "config", "checks", "status"]


def test_koszul_homology_sample():
    h = khl.koszul_homology("integers", ["2"], 2, 2)
    assert h[0]["torsion"] == ["2", "2", "2"]
    assert h[1]["torsion"] == ["2"]
    assert h[2]["torsion"] == []
    assert h == khl.predicted_homology("integers", ["2"], 2, 2)


def test_second_power_dimensions():
    h = khl.nfg_homology(QXY, ["x", "y"], 2, "Sym2", window=4)
    nonzero = [{t: d for t, d in deg["hilbert"].items() if d} for deg in h]
    assert nonzero[:3] == [{"0": 3}, {"1": 2}, {"2": 3}]
    assert all(not x for x in nonzero[3:])


def test_identity():
    result = khl.verify_identity("sum_rule", {"d": 2, "n": 3, "N": 2, "M": 2})
    assert result["pass"]
    assert "sum_rule" in khl.identity_names()


def test_errors():
    with pytest.raises(khl.ValidationError):
        khl.run_scenario({"suite": "thm64", "ring": QXY, "ideal": ["x"], "rank": 2})
    with pytest.raises(khl.ParseError):
        khl.run_scenario('{"suite": "thm32",,}')
    with pytest.raises(khl.KhlError):
        khl.koszul_homology("integers", ["1"], 1, 1)


def test_reproducible_csv():
    cfg = {"suite": "lemma61", "seed": 4}
    a = khl.run_scenario(cfg, timings=False, fmt="csv")
    b = khl.run_scenario(json.dumps(cfg), jobs=3, timings=False, fmt="csv")
    assert a == b
    assert a.count("\n") == 21
