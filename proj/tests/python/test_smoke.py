import json

import pytest

import latkit


def test_catalog_and_check():
    n5 = latkit.catalog("n5")
    assert n5.size == 5
    assert n5.bottom == "0"
    assert n5.top == "1"
    assert n5.leq("a", "b")
    assert not n5.leq("a", "c")
    assert n5.meet("b", "c") == "0"
    assert n5.join("a", "c") == "1"

    report = latkit.check(n5)
    assert report["semidistributive"]
    assert not report["distributive"]
    assert not report["simple"]
    assert report["congruences"] == 5
    assert report["isolated_intervals"] == [("a", "b")]


def test_json_round_trip():
    m3 = latkit.catalog("m3")
    text = latkit.to_json(m3)
    doc = json.loads(text)
    assert sorted(doc.keys()) == ["covers", "elements", "name"]
    back = latkit.from_json(text)
    assert back.elements == m3.elements
    assert latkit.to_json(back) == text


def test_congruences_of_pentagon():
    con = latkit.congruences(latkit.catalog("n5"))
    assert con["count"] == 5
    assert con["identified"] == "(B_2)₊"
    assert "{0|a,b|c|1}" in con["formatted"]
    assert con["carrier"].size == 5


def test_double_and_glue():
    b2 = latkit.catalog("boolean:2")
    doubled = latkit.double(b2, ["p", "q"])
    assert doubled["result"].size == 6
    assert doubled["embedding_ok"]
    assert latkit.is_isomorphic(doubled["result"], latkit.catalog("n6"))

    glued = latkit.glue(latkit.catalog("n5"), "a", "b", latkit.catalog("m3"))
    assert glued["k"].size == 8
    assert glued["isomorphism"]
    assert glued["con_origin_size"] == glued["con_k_size"] == 5
    assert not glued["k_semidistributive"]


def test_expected_divergence_is_reported():
    glued = latkit.glue(latkit.catalog("chain:4"), "a", "b", latkit.catalog("m3"))
    assert not glued["isomorphism"]
    assert glued["leak_expected"]
    assert glued["con_origin_size"] == 8
    assert glued["image_size"] == 5
    assert glued["con_k_size"] == 8


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        latkit.catalog("no-such-lattice")
    with pytest.raises(ValueError):
        latkit.from_json("{not json")
    with pytest.raises(ValueError):
        latkit.glue(latkit.catalog("m3"), "x", "y", latkit.catalog("m3"))


def test_enumeration_and_verify():
    assert [latkit.count_lattices(n) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]
    reports = latkit.verify("sd-equivalence", max_size=4)
    assert len(reports) == 1
    assert reports[0]["ok"]
    assert reports[0]["passes"] == reports[0]["instances"]
