import pytest

import addix


def test_field():
    f = addix.find_field(2, 2)
    assert f["q"] == 4
    assert f["modulus"] == [1, 1, 1]


def test_counts():
    assert addix.count_squares(24) == 6
    assert addix.count_squares(9) == 4
    r = addix.count("NT", 8)
    assert r["formula_value"] == 3 and r["agreed"]


def test_index_and_witness():
    res = addix.additive_index(5, 2, map="dh", T=24, threads=2)
    assert res["least_codim"] == 2 and res["complete"]
    w = res["witness"]
    assert addix.verify_witness(5, 2, "dh", w, T=24)
    w["constants"][1][1] = [(d + 1) % 5 for d in w["constants"][1][1]]
    assert not addix.verify_witness(5, 2, "dh", w, T=24)


def test_table_map():
    # the identity on F_4 is additive
    res = addix.additive_index(2, 2, map="table", table=[0, 1, 2, 3])
    assert res["least_codim"] == 0


def test_check_and_errors():
    r = addix.run_check("dh04", p=5, n=2, T=24)
    assert r["pass"] == "pass" and r["exact"] == 25 and r["bound"] == "6/1"
    with pytest.raises(addix.AddixError) as e:
        addix.run_check("dh04", p=3, n=2, T=5)
    assert e.value.kind == "NotADivisor"
    with pytest.raises(addix.BudgetExceeded):
        addix.run_check("xixa", p=2, n=7)
    with pytest.raises(addix.AddixError):
        addix.run_check("no_such_check")


def test_suite():
    s = addix.run_suite("appendix", threads=2, with_elapsed=False)
    assert s["summary"]["fail"] == 0
    assert s["I_k_by_q"]["4"] == [64, 64, 256]
    assert "dh04" in addix.check_ids() and "desk" in addix.suite_ids()
