import math

import pytest

import carlson


def test_arccos_hp_half():
    assert carlson.arccos_hp(0.5, 30).startswith("1.0471975511965977461542144610")
    assert carlson.arccos_hp("0.5", 30) == carlson.arccos_hp(0.5, 30)


def test_approx_contains_reference():
    for x in (-0.99, -0.5, 0.0, 0.3, 0.999999):
        value, radius = carlson.approx_arccos(x)
        assert abs(value - math.acos(x)) <= radius + 4e-16
        assert radius >= 0


def test_family_bounds_bracket():
    lo, hi = carlson.family_bounds("carlson", 0.3)
    assert lo < math.acos(0.3) < hi
    lo, hi = carlson.family_bounds("thm2_maxcoef(0.5,0.14)", 0.3)
    assert lo is None and hi > math.acos(0.3)


def test_classification():
    assert carlson.classify_symbolic(0, 0) == "StrictlyDecreasing"
    assert carlson.classify_symbolic(0.5, 0.14) == "UniqueMax"
    assert carlson.classify_numeric(0.5, 0.14) == "UniqueMax"
    e = carlson.extrema(0.5, 0.14)
    assert e["x1"] == pytest.approx(0.3827160493827161)


def test_envelope_and_table():
    env = carlson.best_envelope(0.5)
    assert env["lower"] < math.pi / 3 < env["upper"]
    rows = carlson.bound_table([0.25, 0.5, 0.75], ["carlson"])
    assert len(rows) == 3
    assert all(r["width"] > 0 for r in rows)


def test_errors_are_value_errors():
    with pytest.raises(carlson.DomainError):
        carlson.approx_arccos(1.5)
    with pytest.raises(ValueError):
        carlson.family_bounds("nope", 0.5)
    with pytest.raises(carlson.DegenerateParams):
        carlson.extrema(0, 0)
    with pytest.raises(carlson.PrecisionError):
        carlson.arccos_hp(0.5, 5)
