import json

import pytest

import covops


def test_build_and_apply_m1_bracket():
    # B_{2,3;2} at m=1 is 12 dx^2 - 24 dx dy + 6 dy^2
    text = covops.build_operator("B", 1, k=2, lam=2, mu=3)
    assert text.startswith("covops-operator v1\n")
    assert "params lambda 2 mu 3" in text
    # bidifferential apply differentiates then restricts to the diagonal y = x:
    # 12 (x^2 y)_xx - 24 (x^2 y)_xy + 6 (x^2 y)_yy |_{y=x} = 24x - 48x
    out = covops.apply_operator(text, "1 * x[1][1]^2 * y[1][1]")
    assert out == "-24 * x[1][1]"


def test_poly_canonical_roundtrip():
    s = covops.poly_canonical("2 * y[1][1] + 1/3 * x[1][1]^2 + -1", 1)
    assert s == "1/3 * x[1][1]^2 + 2 * y[1][1] + -1"
    assert covops.poly_canonical(s, 1) == s
    with pytest.raises(covops.ParseError):
        covops.poly_canonical("2 * nope", 1)


def test_group_action_exact():
    iota = [["0", "-1"], ["1", "0"]]  # x -> -1/x
    assert covops.act(iota, [["2"]]) == [["-1/2"]]
    assert covops.alpha(iota, [["2"]]) == "2"


def test_normalization_scalar_and_pole():
    d = covops.normalization_d(1, "2", "3", "-", "-")
    assert d["value_den"] == "2"
    assert d["power_of_two"] == -2
    assert d["power_of_pi"] == 4
    with pytest.raises(covops.PoleError):
        covops.normalization_d(1, "1", "10", "-", "+")


def test_classical_m1():
    assert covops.transvectant("1 * x[1][1]^2", "1 * x[1][1] + 1", 2, 1, 1) == "2 * x[1][1]"
    op, weight = covops.rankin_cohen(2, 2, 3)
    assert weight == 9
    assert covops.apply_operator(op, "1 * x[1][1]") == "0"


def test_verify_report():
    report = covops.verify("m1-classical", ms=[1], ks=[1, 2], samples=3, seed=7)
    assert covops.report_passed(report)
    doc = json.loads(report)
    assert doc["suite"] == "m1-classical"
    assert doc["summary"]["fail"] == 0
    # same seed, same bytes
    assert covops.verify("m1-classical", ms=[1], ks=[1, 2], samples=3, seed=7) == report
    # the self-test fault must be caught
    bad = covops.verify("bernstein", ms=[1], samples=3, inject_fault=True)
    assert not covops.report_passed(bad)
