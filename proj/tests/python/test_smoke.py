import hyzeta
import pytest

RUNNING = """
[field]
a = 1
modulus = t + 1
[family]
genus = 1
H = X
Qf = X^2 + (1 + G)*X + 1
h = X
"""


def test_run_family_matches_known_values():
    res = hyzeta.run_family(RUNNING, 1, "t + 1", "0", verify_oracle=True)
    assert res["ok"]
    assert res["P"] == [1, -1, 2]
    assert res["counts"][0] == 2
    assert res["oracle_match"]
    assert "zeta: P(T)/((1-T)(1-2*T))" in res["record"]


def test_precision_profile_ordering():
    p = hyzeta.precision_profile(RUNNING, 5)
    assert p["Nf"] <= p["N"] <= p["N2"]
    assert p["NGamma"] == p["chi2"] + 1
    assert p["N"] == 95 and p["N2"] == 214


def test_batch_equals_singles():
    batch = hyzeta.run_batch(RUNNING, 2, "t^2 + t + 1", ["t", "t + 1"])
    for res in batch:
        assert res["ok"]
        single = hyzeta.run_family(RUNNING, 2, "t^2 + t + 1", res["gamma"])
        assert single["record"] == res["record"]


def test_oracle_agrees_with_pipeline():
    res = hyzeta.run_family(RUNNING, 2, "t^2 + t + 1", "t")
    orc = hyzeta.oracle_zeta(RUNNING, 2, "t^2 + t + 1", "t")
    assert res["P"] == orc["P"]


def test_parse_errors_raise():
    with pytest.raises(ValueError):
        hyzeta.parse_polynomial("X + Y")
    assert "X" in hyzeta.parse_polynomial("X^2 + 1")


def test_inadmissible_parameter_raises():
    g2 = """
[field]
a = 1
modulus = t + 1
[family]
genus = 2
H = X
Qf = X^4 + G*X^3 + X^2 + (1 + G)*X + 1 + G
h = X^2
"""
    with pytest.raises(ValueError):
        hyzeta.run_family(g2, 1, "t + 1", "1")
