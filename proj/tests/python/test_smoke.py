import json

import pytest

import tautext as t


def test_graded_algebra():
    assert t.shift(t.shift({0: 1, 3: 4}, 2), -2) == {0: 1, 3: 4}
    assert t.dual({-1: 2, 0: 3}) == {1: 2, 0: 3}
    assert t.tensor({0: 1, 1: 2}, {0: 1, 1: 2}) == {0: 1, 1: 4, 2: 4}
    assert t.sym_power({0: 1, 1: 2}, 2) == {0: 1, 1: 2, 2: 1}
    assert t.euler_char({0: 1, 1: 3}) == -2


def test_big_integers_round_trip():
    big = 10**40
    assert t.direct_sum({0: big}, {0: big}) == {0: 2 * big}


def test_line_bundle_cohomology():
    x = t.Curve(3)
    assert t.bundle_cohomology(x, t.Bundle.line(4, h0=2)) == {0: 2}
    assert t.bundle_cohomology(x, t.Bundle.canonical(x)) == {0: 3, 1: 1}
    with pytest.raises(ValueError):
        t.Curve(-1)


def test_signed_complex_squares_to_zero():
    terms, diffs = t.signed_complex(4)
    assert [len(c) for c in terms] == [4, 6, 4, 1]
    for d0, d1 in zip(diffs, diffs[1:]):
        for i in range(len(d1)):
            for j in range(len(d0[0])):
                assert sum(d1[i][k] * d0[k][j] for k in range(len(d0))) == 0


def test_orbits():
    sizes = [size for _, size, _ in t.orbit_decompose(3, "pairs:0")]
    assert sizes == [3, 6]
    with pytest.raises(ValueError):
        t.orbit_decompose(3, "triples:1")


def test_ext1_and_classification():
    m = t.CurveModel(t.Curve(3))
    r = t.ext1_taut(m, t.Bundle.line(4, h0=2), 2)
    assert r["ext1"].value == 18
    assert r["hom"].value == 1
    assert t.classify(t.CurveModel(t.Curve(4)), t.Bundle.line(20), 2)["witness"] == "7 > 6"
    assert t.classify(m, t.Bundle.line(9), 2)["verdict"] == "smooth"


def test_e1_page_euler_char_matches():
    m = t.CurveModel(t.Curve(2, hyperelliptic=True))
    e = t.Bundle.line(5)
    page = t.e1_page(m, e, e, 2)
    assert page["euler_char"] == t.euler_char_taut(m, e, e, 2)
    assert all(isinstance(k, tuple) for k in page["entries"])


def test_hyperelliptic_k02():
    h = t.HyperellipticModel(6)
    assert h.k02_omega() == 4
    assert t.koszul_k02(t.Curve(6, True), t.Bundle.trivial()).value == 4


def test_run_job_bn_table():
    job = {
        "command": "bn-table",
        "curve": {"genus": 3},
        "bundle_grid": {"degree": 4, "h0": {"from": 2, "to": 3}},
        "n": 2,
    }
    out, code = t.run_job(json.dumps(job), "json")
    rows = json.loads(out)
    assert code == 0
    assert [r["ext1"] for r in rows] == [18, 24]


def test_run_job_rejects_unknown_key():
    with pytest.raises(ValueError):
        t.run_job('{"command": "ext", "curve": {"genus": 2}, "bogus": 1}')
