import json

import pytest

import bdfkit


def test_orbit_counts():
    counts = {m: len(bdfkit.orbit_representatives(m)) for m in (7, 9, 15, 16, 20, 24, 11)}
    assert counts == {7: 2, 9: 2, 15: 4, 16: 4, 20: 4, 24: 5, 11: 4}


def test_fixed_locus():
    assert bdfkit.fixed_locus([(5, 1)]) == [5]
    assert bdfkit.fixed_locus([(3, 2)]) == [3, 3]
    assert bdfkit.fixed_locus([(6, 1)]) == []


def test_hodge_classes_and_moduli():
    classes = bdfkit.hodge_classes(3, 2)
    assert sorted(c["p"] for c in classes) == [0, 2]
    assert all(c["rigid"] == (c["p"] == 0) for c in classes)


def test_order_count():
    assert bdfkit.order_count(6, 2) == 24
    assert bdfkit.order_count(4, 2) == 12


def test_polarize():
    rep = bdfkit.polarize(8, "-1,1,0", [1, 5])
    assert rep["ok"] and rep["posdef"] == "yes"
    std = bdfkit.polarize(7)
    assert std["principal"]
    assert bdfkit.polarize(8, "1,-1,0", [1, 5])["posdef"] == "no"


def test_search_lambda():
    assert [-1, 1, 0, 0] in bdfkit.search_lambda(8, [1, 5], 1)


def test_classify():
    assert bdfkit.classify(1) == []
    assert sum(len(f["tr_options"]) for f in bdfkit.classify(2)) == 7
    assert len(bdfkit.classify(3, merged=True)) == 20


def test_verify_suite():
    rep = bdfkit.verify("table1")
    assert rep["passed"]
    assert len(rep["flags"]) == 3
    assert rep["unexpected"] == []


def test_errors():
    with pytest.raises(ValueError):
        bdfkit.orbit_representatives(2)
    with pytest.raises(ValueError):
        bdfkit.classify(9)


def test_cli_roundtrip():
    code, out, err = bdfkit.run_cli(["fix", "--m", "5", "--rank", "1"])
    assert code == 0
    assert json.loads(out)["results"]["fix"] == [5]
    assert err.startswith("bdfkit ")
    code, _, _ = bdfkit.run_cli(["orbits", "--m", "x"])
    assert code == 2
