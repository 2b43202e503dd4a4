import os
import subprocess

import pytest

gcs = pytest.importorskip("gcs")


def betti(result, d):
    return result["dims"][str(d)]["betti"]


def test_compute_wheel():
    r = gcs.compute("wheel:5", 5)
    assert betti(r, 2) == 34
    assert betti(r, 3) == 4
    assert all(not v["torsion"] for v in r["dims"].values())
    assert r["euler_consistent"]


def test_compute_petersen_torsion():
    r = gcs.compute("petersen:10", 4, dims=2)
    assert list(r["dims"]) == ["2"]
    assert r["dims"]["2"] == {"betti": 40, "torsion": [2]}


def test_models_agree():
    a = gcs.compute("k4", 3, model="abrams")
    s = gcs.compute("k4", 3)
    assert a["subdivision"] == 2
    assert betti(a, 1) == betti(s, 1)
    assert betti(a, 2) == betti(s, 2) == 3


def test_abort_marker():
    r = gcs.compute("k5", 4, max_cells=50)
    assert r["aborted"]


def test_predict():
    assert gcs.predict("wheel:7", 7, 3)["dims"]["3"]["betti"] == 527
    assert gcs.predict("k4", 3, 2)["dims"]["2"]["betti"] == 3
    assert gcs.predict("k4", 3, 1)["dims"]["1"] == "out-of-range"


def test_errors():
    with pytest.raises(ValueError):
        gcs.compute("wheel:2", 2)
    with pytest.raises(ValueError):
        gcs.compute("k4", 2, model="cube")


def test_relations_and_snf():
    assert gcs.relation("theta5")["level"] == "chain"
    assert gcs.smith_normal_form([[2, 4], [6, 8]])["divisors"] == [2, 4]
    assert "cross-model" in gcs.suite_names()


def test_groupings_and_blowup():
    rows = {tuple(g["groups"]): (g["count"], g["mu"]) for g in gcs.enumerate_groupings(7, 2)}
    assert rows == {(1, 1): (9, 4), (2,): (6, 3)}
    assert gcs.blowup_check("wheel:5", "h", 4, 2)["holds"]


def test_span():
    assert gcs.product_span("k33", 4, 2) == {"cycles": 69, "span": 19, "betti": 19}


def test_dump_complex():
    c = gcs.dump_complex("theta:3", 2, reduce=False)
    assert c["dims"] == [13, 24, 9]


@pytest.mark.skipif("GCS_CLI" not in os.environ, reason="CLI path not given")
def test_cli_matches_module():
    out = subprocess.run([os.environ["GCS_CLI"], "compute", "--graph", "k33", "-n", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert '"2":{"betti":8,"torsion":[]}' in out
