import pytest

import floerkit as fk


def test_series_roundtrip_and_inverse():
    s = fk.Series("3t^1/2 - 2t^0 + t^7/3")
    assert str(fk.Series(str(s))) == str(s)
    inv = fk.Series("1 - t").invert("4")
    assert str(inv) == "t^0 + t^1 + t^2 + t^3 + O(t^4)"
    assert fk.Series("1 - t") * fk.Series("1 + t") == fk.Series("1 - t^2")
    assert fk.Series(0).valuation() is None
    assert fk.Series("3t^-2 + t^5").valuation() == "-2"


def test_not_a_unit():
    with pytest.raises(fk.FloerkitError, match="NotAUnit"):
        fk.Series("2 + t").invert("3")


def test_polytopes():
    assert fk.f_vector("assoc", 5) == [14, 21, 9]
    assert fk.f_vector("multi", 4) == [21, 32, 13]
    assert fk.boundary_check("multi", 4)["ok"]


def test_example_path():
    path = {"n": 1, "pieces": [{"t0": -1, "t1": 1, "A": [[[0, 1]]]}]}
    out = fk.maslov_index(path)
    assert out["string_index"] == 1


def test_sphere():
    datum = fk.sphere_fixture(3, 1)
    hf = fk.floer_cohomology(datum)
    assert hf["rank"] == 2
    assert hf["ranks"] == {"0": 1, "3": 1}
    assert fk.check_datum(fk.sphere_fixture(3, 3))["a_infinity"]["ok"]


def test_sft_and_conductors():
    assert fk.sft_index_bound(3, 0, 1, [1]) == {"mu_max": -4, "bound": -2, "majorant": -2, "satisfies": True}
    h = {"source": ["a", "b"], "target": ["p", "q", "r"], "domain": [0, 1], "phi": [0, 2]}
    k = {"source": ["p", "q", "r"], "target": ["u", "v", "w"], "domain": [0, 2], "phi": [0, 1]}
    assert not fk.is_exact(h, k)
