"""Smoke test for the btcompact extension module.

Build and install with
    pip install --no-build-isolation ./crates/python
then run
    python python/smoke_test.py
"""

import json

import btcompact as bt


def main():
    a2 = bt.RootDatum("A2")
    assert a2.rank == 2 and a2.num_roots() == 6 and a2.weyl_order() == 6
    assert bt.RootDatum("F4").weyl_order() == 1152
    assert bt.RootDatum.from_json(a2.to_json()).root_labels() == a2.root_labels()

    for name, count in [("A1", 3), ("A2", 13), ("B2", 17)]:
        assert len(bt.Fan(bt.RootDatum(name))) == count, name
    merged = bt.Fan(a2, "a1")
    assert len(merged) == 7
    assert merged.describe()["cone_count"] == 7

    assert len(bt.strata(a2)) == 4
    assert len(bt.strata(a2, "a1")) == 3
    assert len(bt.strata(bt.RootDatum("A1"))) == 2

    assert bt.is_non_degenerate(a2, "a1")
    assert not bt.is_non_degenerate(bt.RootDatum("A1xA1"), "a1")
    assert not bt.is_j_relevant(a2, "a1", "")

    a1 = bt.RootDatum("A1")
    assert bt.special(a1, ["1/3"]) == (False, "3")
    assert bt.special_after_extension(a1, ["1/2"], 2)
    n, det, coeffs, translation = bt.transitivity(a1, ["0"], ["1/3"])
    assert (n, det, coeffs, translation) == ("3", 2, ["1"], ["1/3"])

    lim = bt.Fan(a2).limit_of_ray(["2", "5"], ["0", "1"])
    assert lim["facade_coords"] == {"a1": "2"}
    profile = json.dumps({"a1": "5", "a2": "inf", "a1+a2": "inf"})
    assert merged.limit_of_profile(profile)["core_type"] == ["a1"]

    poly = json.dumps({"monomials": [{"exp": {"(-a2,1)": 2}, "logc": "-3/2"}]})
    assert bt.seminorm(a2, "a1", ["1/2", "1/3"], poly) == "-13/6"
    assert bt.seminorm(a2, "a1", ["1/2", "1/3"]) == {"(-a1-a2,1)": "-5/6", "(-a2,1)": "-1/3"}

    try:
        bt.RootDatum("Q9")
    except ValueError as e:
        assert str(e).startswith("UnknownType")
    else:
        raise AssertionError("expected ValueError")

    assert bt.check(bt.RootDatum("G2"), 200)["passed"]
    print("smoke test passed")


if __name__ == "__main__":
    main()
