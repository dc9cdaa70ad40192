import json
import os

import pytest

import specalc_py


def fixture_text(name):
    path = os.path.join(os.environ["SPECALC_FIXTURES"], name)
    with open(path) as f:
        return f.read()


def test_mtm_goldens():
    out = specalc_py.mtm(1, 0, 0, 9)
    assert out["dimB"] == [1, 2, 3, 5, 7, 10, 14, 19, 26, 35]
    assert out["p"] == [1, 0, 0, 1, 0, 1, 1, 1, 2, 2]
    assert out["ev"][-1] == 20
    assert out["odd"][-1] == 15

    field = specalc_py.mtm(0, 1, 0, 7)
    assert field["dimB"][-1] == 54
    assert "ev" not in field


def test_dims_on_presentation():
    out = specalc_py.dims(fixture_text("presentation_cm.json"))
    assert out["dim_algebra"] == 9
    assert out["hereditary"] is False
    assert out["ext_totals"] == [4, 4, 1]


def test_dims_on_species():
    out = specalc_py.dims(fixture_text("species_cm.json"))
    assert out["delta_total"] == 9
    assert out["exact"] is True


def test_saturate_and_check():
    sat = specalc_py.saturate(fixture_text("presentation_cm.json"))
    assert sat["dim_algebra"] == 10
    assert sat["presentation"]["relations"] == []

    chk = specalc_py.check(fixture_text("linear_a5_rad2.json"))
    assert chk["ok"] is True
    assert chk["hereditary"] is False


def test_one_motive():
    out = specalc_py.one_motive(fixture_text("one_motive_cm.json"))
    assert out["total"] == 9
    assert out["warnings"] == []


def test_input_errors_raise_value_error():
    with pytest.raises(ValueError):
        specalc_py.dims("{not json")
    with pytest.raises(ValueError):
        specalc_py.dims(json.dumps({
            "quiver": {"vertices": 1, "edges": [{"from": 0, "to": 0, "label": "a"}]},
            "relations": [],
        }))
    with pytest.raises(ValueError):
        specalc_py.mtm(0, 0, 0, 4)
