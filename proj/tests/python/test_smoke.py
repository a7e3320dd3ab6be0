"""Smoke tests for the python bindings."""

import pytest

mckay = pytest.importorskip("mckay")


def test_catalog_names():
    names = mckay.catalog_names()
    assert "2T" in names and "2I" in names and "BD:8" in names
    assert len(names) == 19


def test_group_properties():
    g = mckay.build_group("BD:8")
    assert g.order == 8
    assert g.num_classes == 5
    assert g.exponent == 4
    assert sorted(g.class_sizes()) == [1, 1, 2, 2, 2]


def test_character_table():
    table = mckay.character_table(mckay.build_group("2T"))
    assert sorted(table["degrees"]) == [1, 1, 1, 2, 2, 2, 3]
    assert table["order"] == 24
    sizes, orders = table["classes"]
    assert sum(sizes) == 24


def test_mckay_classification():
    result = mckay.mckay_matrix(mckay.build_group("2T"))
    assert result["cartan"]["family"] == "E"
    assert result["cartan"]["rank"] == 6
    affine = mckay.mckay_matrix(mckay.build_group("2T"), include_trivial=True)
    assert affine["cartan"]["affine"] is True


def test_classify_cartan():
    assert mckay.classify_cartan([[2, -1], [-3, 2]])["family"] == "G"
    assert not mckay.classify_cartan([[2, 1], [1, 2]])["known"]


def test_fold_g2():
    fold = mckay.fold("2T", "BD:8")
    assert fold["n"] == 3
    assert fold["P"] == [[-2, 3], [3, -6]]
    assert fold["C"] == [[0, 1], [3, 0]]
    assert fold["D"] == [[-2, 1], [3, -2]]
    assert fold["cartan"] == {"family": "G", "rank": 2}
    assert fold["verdicts"]["main_identity"] is True
    assert fold["verdicts"]["two_I_minus_C_eq_minus_D"] == "row"


def test_fold_f4():
    fold = mckay.fold("2O", "2T")
    assert fold["cartan"] == {"family": "F", "rank": 4}
    assert fold["verdicts"]["main_identity"] is True


def test_cyclotomic_arithmetic():
    z4 = mckay.Cyclotomic.root_of_unity(4, 1)
    assert z4 * z4 == mckay.Cyclotomic(-1)
    assert z4.conj() == mckay.Cyclotomic.root_of_unity(4, 3)
    assert (z4 * z4.inverse()).is_rational()
    assert complex(z4) == pytest.approx(1j)


def test_group_from_json():
    import json

    doc = {"m": 4, "generators": [[[[1, 1, 1]], 0, 0, [[3, 1, 1]]], [0, 1, -1, 0]]}
    g = mckay.group_from_json(json.dumps(doc))
    assert g.order == 8


def test_standard_pairs():
    pairs = mckay.standard_pairs()
    named = [p for p in pairs if p["named"]]
    assert len(named) == 9
    assert any(p["G"] == "2O" and p["expected_family"] == "F" for p in named)
