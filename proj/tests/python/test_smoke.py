import json

import pytest

import mdecomp

K4_MINUS_EDGE = (["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("a", "d")])


def k4_minus_edge():
    return mdecomp.graphic(*K4_MINUS_EDGE)


def test_constructors_and_rank():
    m = k4_minus_edge()
    assert len(m) == 5
    assert m.rank() == 3
    assert sorted(m.circuits) == [["0", "1", "2"], ["0", "1", "3", "4"], ["2", "3", "4"]]
    assert m.rank_of(["2", "3", "4"]) == 2
    assert m.is_circuit(["0", "1", "2"])
    assert mdecomp.gf2([[1, 0], [0, 1], [1, 1]]).circuits == [["0", "1", "2"]]
    spec = '{"kind": "circuits", "ground": [0, 1, 2], "circuits": [[0, 1, 2]]}'
    assert mdecomp.Matroid.from_json(spec).same_as(
        mdecomp.Matroid.from_circuits(["0", "1", "2"], [["0", "1", "2"]])
    )


def test_connectivity_and_duality():
    u24 = mdecomp.uniform(2, 4)
    assert u24.is_3_connected()
    assert mdecomp.separations(u24) == []
    assert u24.dual().same_as(u24)
    m = k4_minus_edge()
    assert mdecomp.phi(m, ["0", "1", "2"]) == 1
    assert len(mdecomp.good_separations(m)) == 2
    assert len(mdecomp.separations(mdecomp.uniform(3, 4))) == 3


def test_decompose():
    d = mdecomp.decompose(k4_minus_edge())
    assert len(d["nodes"]) == 3 and len(d["edges"]) == 2
    kinds = {tuple(n["part"]): n["torso"]["kind"] for n in d["nodes"]}
    assert kinds == {("0", "1"): "circuit", ("2",): "cocircuit", ("3", "4"): "circuit"}
    assert d["adhesion"] == 2 and d["irredundant"]
    assert mdecomp.decompose_dot(k4_minus_edge()).count(" -- ") == 2
    assert json.loads(mdecomp.decompose_json(k4_minus_edge())) == d


def test_split_two_sum_and_localize():
    m = k4_minus_edge()
    first, second, shared = mdecomp.split_along(m, ["0", "1", "2"])
    assert mdecomp.two_sum(first, second, shared).same_as(m)
    local = mdecomp.localize(m, [["0", "1"], ["3", "4"]])
    assert local.same_as(mdecomp.Matroid.from_circuits(["2", "@e0", "@e1"], [["2", "@e0"], ["2", "@e1"], ["@e0", "@e1"]]))


def test_verify():
    ok, summary = mdecomp.verify(k4_minus_edge())
    assert ok
    assert "phi is submodular" in summary


def test_errors():
    with pytest.raises(mdecomp.MatroidError, match="AxiomViolation"):
        mdecomp.Matroid.from_circuits(["a", "b"], [["a"], ["a", "b"]])
    with pytest.raises(mdecomp.MatroidError, match="TooSmall"):
        mdecomp.decompose(mdecomp.uniform(1, 2))
    with pytest.raises(ValueError):
        mdecomp.Matroid.from_json("{")
    saved = mdecomp.enumeration_cap()
    with pytest.raises(mdecomp.MatroidError, match="GroundSetTooLarge"):
        mdecomp.decompose(mdecomp.uniform(2, 16))
    assert mdecomp.enumeration_cap() == saved
