import math

import pytest

import fintop

E2_OPENS = [[], ["a"], ["d"], ["a", "b"], ["a", "d"], ["a", "b", "d"], ["a", "b", "c", "d"]]


@pytest.fixture
def e2():
    return fintop.FinSpace.from_open_sets(["a", "b", "c", "d"], E2_OPENS)


def test_matrix(e2):
    assert fintop.furtherness_matrix(e2) == [[0, 1, 3, 1], [0, 0, 2, 1], [0, 0, 0, 0], [1, 2, 3, 0]]
    assert fintop.furtherness(e2, "a", "c") == 3


def test_oracle_agrees(e2):
    for x in e2.labels:
        for y in e2.labels:
            value, chain = fintop.furtherness_oracle(e2, x, y)
            assert value == fintop.furtherness(e2, x, y)
            assert len(chain) == value + 1


def test_space_accessors(e2):
    assert len(e2) == 4
    assert e2.minimal("b") == ["a", "b"]
    assert e2.opens() == E2_OPENS
    assert e2.is_t0()
    assert e2.closure(["a"]) == ["a", "b", "c"]
    assert fintop.FinSpace.from_json(e2.to_json()) == e2


def test_regions(e2):
    assert fintop.region_report(e2, ["a", "c"])["center"] == ["a"]
    assert fintop.region_report(e2, ["a", "c"])["radius"] == 1
    assert fintop.quasi_report(e2, ["a"])["quasi_radius"] == 1
    u = fintop.union_analysis(e2, [["d"], ["b"]])
    assert u["case"] == "2.26-i"
    assert u["direct"]["radius"] == 2
    assert math.isinf(fintop.furtherness_to_set(e2, ["a"], []))


def test_balls_and_constructions(e2):
    assert fintop.ball(e2, "a", 1, backward=True) == ["a", "b", "c"]
    assert len(fintop.core(e2)) == 1
    assert fintop.opposite(fintop.opposite(e2)) == e2
    s = fintop.FinSpace.from_open_sets(["a", "b"], [[], ["a"], ["a", "b"]])
    t = fintop.FinSpace.from_open_sets(["x", "y"], [[], ["x"], ["x", "y"]])
    p = fintop.product([s, t])
    assert fintop.furtherness(p, "a,x", "b,y") == 3
    assert "digraph lattice" in fintop.export_dot(e2, lattice=True)


def test_enumeration_and_random():
    assert len(fintop.enumerate_topologies(3)) == 29
    assert len(fintop.enumerate_topologies(3, t0_only=True)) == 19
    assert fintop.random_space(6, 5) == fintop.random_space(6, 5)


def test_errors():
    with pytest.raises(fintop.FintopError):
        fintop.FinSpace.from_open_sets(["a", "b", "c"], [[], ["a"], ["c"], ["a", "b", "c"]])
    with pytest.raises(ValueError):
        fintop.FinSpace.from_json('{"points":["a"]}')


def test_verify():
    report = fintop.verify("furtherness.triangle_inequality", max_n=3)
    assert report["passed"]
    assert "regions.union_pairs" in fintop.property_names()
