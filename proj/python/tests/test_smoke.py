"""Smoke tests for the python bindings; runnable directly or under pytest."""

import os
import random
import sys

import cascade_ec as ec


def test_layout_shape():
    lay = ec.Layout("cp-azure", 6, 2, 2)
    assert (lay.k, lay.r, lay.p, lay.n, lay.w) == (6, 2, 2, 10, 8)
    assert lay.labels == ["D1", "D2", "D3", "D4", "D5", "D6",
                          "G1", "G2", "L1", "L2"]
    assert lay.groups[-1]["members"] == [8, 9, 7]  # L1, L2, G2 cascade
    assert ec.verify_cascade(lay)


def test_invalid_spec():
    try:
        ec.Layout("azure", 3, 2, 5)
    except ec.InvalidSpec:
        pass
    else:
        raise AssertionError("expected InvalidSpec")


def test_encode_repair_roundtrip():
    lay = ec.Layout("cp-uniform", 6, 2, 2)
    rng = random.Random(7)
    data = [bytes(rng.randrange(256) for _ in range(128)) for _ in range(6)]
    stripe = ec.encode(lay, data)
    assert stripe[:6] == data
    blocks = list(stripe)
    blocks[1] = None
    blocks[7] = None
    out = ec.reconstruct(lay, [1, 7], blocks)
    assert out[1] == stripe[1] and out[7] == stripe[7]
    assert ec.decode(lay, blocks) == data


def test_plan_and_metrics():
    lay = ec.Layout("cp-azure", 24, 2, 2)
    plan = ec.plan_repair(lay, [lay.labels.index("G2")], resolve=True)
    assert plan["cost"] == 2 and plan["mode"] == "local"
    m = ec.metrics(lay)
    assert abs(m["arc1"] - 11.357) < 0.01
    assert not ec.decodable(ec.Layout("cp-azure", 6, 2, 2), [0, 1, 2, 8])


def test_undecodable_raises():
    lay = ec.Layout("cp-azure", 6, 2, 2)
    try:
        ec.plan_repair(lay, [0, 1, 2, 8])
    except ec.Undecodable:
        pass
    else:
        raise AssertionError("expected Undecodable")


def test_reliability():
    lay = ec.Layout("azure", 6, 2, 2)
    prof = ec.survival_profile(lay)
    assert prof[1] == 0.0 and prof[-1] == 1.0
    res = ec.mttdl(lay)
    assert res["years"] > 0


def main():
    mod = sys.modules[__name__]
    for name in sorted(n for n in dir(mod) if n.startswith("test_")):
        getattr(mod, name)()
        print(f"{name}: ok")


if __name__ == "__main__":
    main()
