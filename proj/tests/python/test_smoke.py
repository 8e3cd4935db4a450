"""Smoke tests for the python bindings."""

import json

try:
    import nilorb
except ImportError:  # plain cmake build: the module sits next to the build tree
    import _nilorb as nilorb


def test_linalg_basics():
    assert nilorb.rank([[0, 1], [0, 0]]) == 1
    assert nilorb.nilpotency_degree([[0, 0], [1, 0]]) == 2
    assert nilorb.nilpotency_degree([[1, 0], [0, 1]]) is None
    assert nilorb.corner_submatrix([[1, 2], [3, 4]], 1, 1) == [["3"]]


def test_orbit_enumeration_and_classification():
    orbits = nilorb.enumerate_orbits([1, 1, 1])
    assert len(orbits) == 7
    assert all("dim" in o for o in orbits)

    e = nilorb.classify([[0, 0], [1, 0]], [1, 1])
    assert e["arrows"] == [{"from": 1, "to": 2, "mult": 1}]

    rep = nilorb.representative_matrix(json.dumps(e))
    assert rep == [["0", "0"], ["1", "0"]]


def test_order_and_hasse():
    a = json.dumps({"blocks": [1, 1], "arrows": [{"from": 1, "to": 2, "mult": 1}], "dots": [0, 0]})
    b = json.dumps({"blocks": [1, 1], "arrows": [], "dots": [1, 1]})
    assert nilorb.leq(a, b) is True
    assert nilorb.leq(b, a) is False

    ps = nilorb.hasse_json([2, 1])
    assert len(ps["elements"]) == 4
    assert len(ps["covers"]) == 3
    assert "digraph" in nilorb.hasse_dot([2, 1])


def test_normal_forms():
    h, g = nilorb.normal_form([[2, -4], [1, -2]], [1, 1])
    assert h == [["0", "0"], ["1", "0"]]
    hu, u = nilorb.u_normal_form([[2, -4], [1, -2]])
    assert hu == [["0", "0"], ["1", "0"]]
    assert not nilorb.is_generic([[0, 1], [0, 0]], [1, 1])


def test_invariants():
    datum = nilorb.builtin_datum("det_i", n=3, i=1)
    val = nilorb.evaluate_datum(datum, [[0, 0, 0], ["1/2", 0, 0], [5, 3, 0]])
    assert val == "3/2"
    assert nilorb.datum_weight(datum, 3) == [-1, 0, 1]
    assert nilorb.is_sum_free(datum)
    toric, bound = nilorb.toric_check(datum, 3, 6, 1)
    assert toric
    measured, predicted, match = nilorb.toric_exponents(datum, 3)
    assert match and measured == predicted


def test_finiteness_and_conjugacy():
    v = nilorb.is_finite([1, 1, 1], 3)
    assert v["finite"] is False and v["witness"] == "D"
    assert nilorb.is_finite([2, 1], 2)["finite"] is True

    d1 = nilorb.witness_family("D", [1, 1, 1], 3, "1")
    d2 = nilorb.witness_family("D", [1, 1, 1], 3, "2")
    res = nilorb.are_conjugate(d1, d2, [1, 1, 1])
    assert res["result"] == "no"

    m = nilorb.sample("nilpotent", [1, 1, 1], 2, 7)
    g = nilorb.sample("parabolic", [1, 1, 1], 2, 8)
    assert nilorb.nilpotency_degree(m) in (1, 2)
    same = nilorb.are_conjugate(m, m, [1, 1, 1])
    assert same["result"] == "yes"


def test_selftest():
    passed, failed, failures = nilorb.selftest()
    assert failed == 0 and passed > 0
