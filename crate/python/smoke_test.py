"""Smoke test for the finlat Python module. Run with python or pytest."""

import json

import finlat


def test_completions():
    m3 = finlat.generate("m3")
    assert len(m3) == 5 and m3.is_lattice()
    bl = finlat.bl_completion(m3)
    assert bl.kind == "BL" and len(bl) == 8
    assert bl.to_poset().is_isomorphic(finlat.generate("boolean", 3))
    assert bl.is_frame()
    dm = finlat.dm_completion(finlat.generate("antichain", 2))
    assert dm.members() == [[], ["0"], ["1"], ["0", "1"]]
    assert dm.report()["iso_class"] == "boolean(2)"


def test_annihilators_and_classes():
    m3 = finlat.generate("m3")
    ann = finlat.annihilator(m3, "a", "0")
    assert ann == ["0", "b", "c"]
    assert finlat.normal_closure(m3, ann) == m3.elements
    flags = finlat.classify(finlat.generate("n5"))
    assert not flags["distributive"] and not flags["proheyting"]
    t = finlat.tower(m3)
    assert t["levels"]["BL"] == 8 and t["levels"]["DM"] == 5


def test_json_and_duality():
    p = finlat.Poset(["0", "x", "1"], [(0, 1), (1, 2)], name="c3")
    assert p.leq("0", "1") and p.meet("x", "1") == "x"
    q = finlat.Poset.from_json(p.to_json())
    assert q.is_isomorphic(p) and json.loads(q.to_json())["name"] == "c3"
    d = finlat.dualize(finlat.generate("boolean", 2))
    assert len(d["points"]) == 2
    try:
        finlat.dualize(finlat.generate("m3"))
    except ValueError as e:
        assert "not distributive" in str(e)
    else:
        raise AssertionError("expected ValueError")


def test_verify():
    reports = finlat.verify(4, "kappa-jd,finite-collapse")
    assert reports and all(r["verdict"] == "pass" for r in reports)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print("ok", name)
