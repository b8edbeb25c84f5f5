"""Smoke tests for the python facade: every exposed operation round-trips
through the extension module and returns the documented exact values."""

import pytest

import remspec


def test_newton_polygon_and_count():
    r = remspec.newton("X^2 - 1", "-(2*X*Y + 1)")
    assert r["vertices"] == [[-1, 0], [0, -1], [1, 0]]
    assert r["bcount"] == 2


def test_darboux_cofactor():
    c = remspec.darboux("X^2 - 1", "-(2*X*Y + 1)", "X - 1")
    assert c is not None
    assert c.replace(" ", "") == "X+1"
    assert remspec.darboux("X^2 - 1", "-(2*X*Y + 1)", "Y") is None


def test_jacobian_derivation():
    j = remspec.jacobian("Y", "X^2")
    assert j["degree"] == 1
    assert j["a"].replace(" ", "") == "X"
    assert j["b"].replace(" ", "") == "2*Y"


def test_spectrum_base_example():
    r = remspec.spectrum("Y", "X^2")
    assert r["degree"] == 2
    assert r["rho"] == 1
    assert r["sigma_count"] == 2
    assert r["gamma_count"] == 1
    assert r["deg_R"] == 1
    assert [e["at_infinity"] for e in r["entries"]] == [False, True]
    finite = r["entries"][0]
    assert finite["modulus_str"] == "t"
    assert finite["n"] == 2
    assert finite["profile"] == [[2, 1]]


def test_spectrum_seed_changes_nothing_essential():
    r0 = remspec.spectrum("Y", "X^2", seed=0)
    r7 = remspec.spectrum("Y", "X^2", seed=7)
    for key in ("rho", "sigma_count", "gamma_count", "deg_R"):
        assert r0[key] == r7[key]


def test_verify_bounds_all_hold():
    r = remspec.verify("Y", "X^2")
    v = r["verdicts"]
    assert v["rho_lt_bcount_plus_2"] is True
    assert v["sigma_le_rho_plus_gamma"] is True
    assert v["gamma_le_3"] is True
    assert v["sigma_lt_bcount_plus_2_plus_gamma"] is True
    assert v["degree_relation"] == {
        "holds": True,
        "lhs": 2,
        "rhs": 2,
        "informational": True,
    }
    assert r["falsified"] is False
    assert r["bcount"] == 1

    explicit = remspec.verify("Y", "X^2", a="X", b="2*Y")
    assert explicit["falsified"] is False

    with pytest.raises(ValueError):
        remspec.verify("Y", "X^2", a="X")


def test_indecomposability():
    good = remspec.indecomposable("Y", "X^2")
    assert good["verdict"] == "indecomposable"
    assert good["certified"] is True
    assert good["witness"] is not None

    bad = remspec.indecomposable("(X+Y)^2", "X*Y", trials=5)
    assert bad["verdict"] == "likely_decomposable"
    assert bad["certified"] is False
    assert bad["witness"] is None
    assert bad["trials_used"] == 5


def test_error_mapping():
    with pytest.raises(ValueError):  # implicit multiplication is rejected
        remspec.newton("2X", "Y")
    with pytest.raises(ArithmeticError):  # dependent pair
        remspec.spectrum("X + Y", "X + Y")
    with pytest.raises(ArithmeticError):  # non-coprime derivation
        remspec.newton("X*Y", "X^2")
