import json

import pytest

import canord


def test_verify_bl3():
    r = canord.verify("BL", n=3)
    assert r["countResolution"] == 5
    assert r["countGroup"] == 5
    assert r["agree"] and r["ok"]
    assert r["n0"] == 2


def test_counts_both_ways():
    for n in range(1, 4):
        assert canord.count_from_group("B", n=n) == n + 3
        assert canord.count_from_resolution("B", n=n) == n + 3
    assert canord.count_from_group("A12", e=3) == 4
    assert canord.count_from_group("ADE", group="E8") == 9


def test_twisted_rows():
    r = canord.verify("Anz", n=2, e=3)
    assert r["torsion"][0]["order"] == 3
    assert canord.verify("L", n=1)["skewConstructible"] is False


def test_bad_parameters():
    with pytest.raises(ValueError):
        canord.verify("BD", n=0)
    with pytest.raises(ValueError):
        canord.verify("nonsense", n=1)


def test_quiver_and_cycles():
    q = canord.mckay_quiver("E", 6)
    assert sorted(q["dims"]) == [1, 1, 1, 2, 2, 2, 3]
    assert q["affine"]
    assert canord.fundamental_cycle("E", 8) == [2, 4, 6, 5, 4, 3, 2, 3]


def test_resolution_and_dot():
    res = canord.resolution("L", n=2)
    assert json.loads(json.dumps(res)) == res
    assert canord.lattice_dot("L", n=2).count("e=2") == 2


def test_cover():
    r = canord.cover_structure_check(3, 2)
    assert r["ok"] and not r["failures"]
    with pytest.raises(ValueError):
        canord.cover_structure_check(4, 1, 7)
