"""Smoke test for the arclink extension module.

Build it first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""
from pathlib import Path

import arclink

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    e8 = arclink.Graph.parse((DATA / "e8.graph").read_text())
    assert len(e8) == 8
    assert e8.is_negative_definite()
    assert e8.classify() == "NonCyclicQuotient(2,3,5)"

    chain = arclink.Graph.chain([-2, -2, -2, -2])
    assert chain.classify() == "CyclicQuotient(5,4)"

    import json
    report = json.loads(arclink.Graph.star(-1, [[-2], [-3], [-7]]).analyze(6))
    assert report["schema"] == 1
    assert len(report["components"]) == 19

    c = arclink.Cusp([3, 3, 3])
    assert c.monodromy() == ((21, 8), (-8, -3))
    assert c.dual() == c
    assert arclink.recover(c.monodromy()).is_rotation_of(c)
    assert arclink.Cusp([2, 2, 3, 4]).check_duality()["identity_holds"]

    q = arclink.quotient_report((DATA / "2I.grp").read_text())
    assert (q["order"], q["classes"], q["type"]) == (120, 9, "E8")

    labels = arclink.cyclic_labels(5, 2, 2)
    assert len(labels) == 10
    assert [a // m for a, m, on in labels if on] == [1, 2]

    r = arclink.inoue_check((DATA / "golden.field").read_text())
    assert r["M_u"] == ((1, 1), (1, 2)) and r["recovered"] == [3]
    assert r["witness"] is None

    try:
        arclink.Cusp([2, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("all-2 sequence accepted")

    print("arclink smoke test ok")


if __name__ == "__main__":
    main()
