"""Smoke test for the `secreg` Python module.

Build and install first:

    pip install maturin
    pip install --no-build-isolation -e crates/secreg-py
"""

import json

import secreg


def main():
    assert "type2_a3_b5" in secreg.catalog_ids()

    x = secreg.Surface.type2(3, 5, "s^4t+s^3t^2+s^2t^3+st^4")
    assert (x.r, x.d) == (6, 8)

    b = x.betti()
    assert b.pd == 5 and b.depth == 2
    assert [b.get(i, 1) for i in (1, 2, 3)] == [6, 8, 3]
    assert [b.get(i, 4) for i in range(1, 6)] == [1, 4, 6, 4, 1]

    coh = x.cohomology()
    assert coh["e"] == 6
    lo = coh["window"][0]
    assert coh["h3"][-2 - lo] == 7

    inv = x.invariants(seed=1)
    assert tuple(inv["tau"]) == (2, 3)

    lengths = x.secant_lengths(5, seed=1)
    want = str(secreg.extremal_secant_length(8, 6))
    assert all(l == h == want for l, h in lengths), lengths

    t1 = secreg.Surface.type1(8)
    assert t1.betti() == secreg.type1_betti_formula(8)

    rep = secreg.run_example("type1_d8", seed=1)
    assert rep.passed, rep.failures()
    assert len(json.loads(rep.to_json())) == len(rep)

    try:
        secreg.Surface.type2(3, 5, "s^5")
    except ValueError:
        pass
    else:
        raise AssertionError("pure power accepted")

    print("python smoke test ok:", rep.counts())


if __name__ == "__main__":
    main()
