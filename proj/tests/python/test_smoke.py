"""End-to-end smoke tests for the python bindings."""

import pytest

import srkit


def test_version():
    assert srkit.__version__ == "0.1.0"


def test_field_arithmetic():
    f = srkit.Field.of_order(7)
    assert f.q == 7 and f.p == 7 and f.e == 1
    assert f.mul(3, 5) == 1
    assert f.inv(4) == 2
    assert f.parse("6") == 6 and f.format(6) == "6"

    f64 = srkit.Field.create(2, 6)
    assert f64.header() == "GF p=2 e=6 mod=1,1,0,0,0,0,1"
    w = f64.parse("w")
    assert f64.pow(w, 63) == 1
    assert f64.frobenius(w, 1) == f64.mul(w, w)


def test_superregular_check_and_search():
    f = srkit.Field.of_order(3)
    good = srkit.Toeplitz(f, ["1", "1", "2"])
    assert srkit.is_superregular(good) == {"superregular": True, "witness": None}

    bad = srkit.Toeplitz(f, ["1", "1", "1"])
    verdict = srkit.is_superregular(bad)
    assert not verdict["superregular"]
    assert verdict["witness"]["rows"] == [2, 3]

    found = srkit.find_superregular(3, 2)
    assert found["found"] and found["witness"].col == [1, 1, 2]
    assert found["stats"]["nodes"] == 3

    assert srkit.count_superregular(4, 2)["count"] == 18
    cols = [t.col for t in srkit.enumerate_superregular(3, 2)]
    assert cols == [[1, 1, 2], [1, 2, 2], [2, 1, 1], [2, 2, 1]]

    with pytest.raises(srkit.SrkitError):
        srkit.find_superregular(6, 2)  # not a prime power


def test_bounds_and_counts():
    assert srkit.field_size_bound(5)["bound"] == 11
    table = [srkit.field_size_bound(g)["bound"] for g in range(3, 11)]
    assert table == [3, 5, 11, 27, 77, 233, 751, 2495]
    assert srkit.catalan(9) == 4862
    assert srkit.binom(10, 5) == 252
    assert srkit.product_identity_check(12)


def test_actions_and_orbit():
    f = srkit.Field.of_order(3)
    t = srkit.Toeplitz(f, ["1", "1", "2"])
    assert srkit.act_inverse(t).col == [1, 2, 2]
    assert srkit.act_inverse(srkit.act_inverse(t)).col == t.col
    assert srkit.act_scale(2, t).col == [1, 2, 2]
    assert srkit.act_global_scale(2, t).col == [2, 2, 1]

    f4 = srkit.Field.of_order(4)
    seed = srkit.Toeplitz(f4, ["1", "w", "1"])
    orb = srkit.orbit(seed)
    assert len(orb) == 6
    assert orb[0]["word"] == ""
    assert srkit.canonical_form(seed).col == [1, 1, 2]


def test_minfield_and_conjecture():
    r = srkit.min_field_size(4)
    assert r["q"] == 5 and r["ruled_out"] == [2, 3]

    c = srkit.test_conjecture(5)
    assert c["status"] == "witness-found" and c["q"] == 8
    assert srkit.is_superregular(c["witness"])["superregular"]


def test_code_pipeline():
    f64 = srkit.Field.create(2, 6)
    t8 = srkit.Toeplitz(f64, ["1", "w", "w^9", "w^33", "w^33", "w^9", "w", "1"])
    assert srkit.is_superregular(t8)["superregular"]

    ex = srkit.extract_mdp(t8, 3, 2, 2)
    assert ex["rows"] == [2, 4, 6, 8]
    assert ex["cols"] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert len(ex["assembled"]) == 4 and len(ex["assembled"][0]) == 12

    f5 = srkit.Field.of_order(5)
    g = srkit.PolyMatrix(f5, 2, 1, {(1, 1): ["1", "1"], (2, 1): ["1", "2"]})
    assert g.entry(1, 1) == ["1", "1"]
    with pytest.raises(srkit.SrkitError):
        g.entry(3, 1)

    assert srkit.column_distance(g, 1) == 3
    assert srkit.coldist_bound(2, 1, 1) == 3

    rep = srkit.mdp_certify(g, 2, 1, 1)
    assert rep["profile"] == [2, 3, 4]
    assert rep["is_mdp"] and rep["monotone"] and rep["within_bounds"]
    assert rep["complexity"]["delta_hat"] == 1 and rep["complexity"]["basic"]


def test_pascal():
    p = srkit.pascal_min_prime(3)
    assert p["prime"] == 5 and p["failures"] == [2, 3]
    assert p["witness"].col == [1, 2, 1]
    assert srkit.pascal_mod_p(3, 2).col == [1, 0, 1]


def test_text_round_trips():
    f = srkit.Field.of_order(3)
    t = srkit.Toeplitz(f, ["1", "1", "2"])
    assert t.to_text() == "GF p=3 e=1 mod=0,1\ncol: 1, 1, 2\n"
    back = srkit.toeplitz_from_text(t.to_text())
    assert back.col == t.col and back.field.q == 3

    f5 = srkit.Field.of_order(5)
    g = srkit.PolyMatrix(f5, 2, 1, {(1, 1): ["1", "1"], (2, 1): ["1", "2"]})
    gback = srkit.poly_matrix_from_text(g.to_text())
    assert gback.to_text() == g.to_text()
