import pytest

import klrpoly as kl


def test_permutation_basics():
    w = kl.Permutation("2354167")
    assert w.entries == [2, 3, 5, 4, 1, 6, 7]
    assert w.length() == 5
    assert str(w * (2, 3)) == "2534167"
    assert kl.Permutation([3, 2, 1]) == kl.Permutation("321")
    with pytest.raises(ValueError):
        kl.Permutation("1223")


def test_rtilde_and_r():
    assert str(kl.rtilde("2354167", "3564172")) == "q^6+q^4"
    assert str(kl.rpoly_r("123", "321")) == "q^3-2q^2+2q-1"
    assert kl.rpoly_from_rtilde("123", "321") == kl.rpoly_r("123", "321")
    assert kl.rtilde("321", "123").is_zero()
    assert kl.rtilde_by_paths("123", "321", "decreasing").coefficients == [0, 1, 0, 1]
    assert str(kl.substitute_shift(kl.Polynomial([0, 1, 0, 1]), 3)) == "q^3-2q^2+2q-1"


def test_shared_table():
    table = kl.RTable()
    assert kl.inversion_sum("123", "321", table).is_zero()
    assert len(table) > 0
    kl.inversion_sum("123", "321", table)
    assert table.hits > 0


def test_paths_and_involution():
    paths = kl.monotone_paths("2314", "4312")
    assert any(str(p) == "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312" for p in paths)
    vps = kl.vpaths("1234", "4312")
    assert len(vps) == 32
    assert kl.vpath_signed_sum("1234", "4312").is_zero()
    for p in vps:
        image = kl.reflect(p)
        assert image.sign == -p.sign
        assert kl.reflect(image) == p
    assert kl.parity_census("123", "321") == (3, 3)
    pairing = kl.interval_pairing("123", "321")
    assert pairing[kl.Permutation("123")] == kl.Permutation("213")


def test_refinement():
    report = kl.classify_s_interval("2354167", "3564271")
    assert report["is_s_interval"]
    sums = [kl.refinement_sum("2354167", "3564271", k)["sum_text"] for k in (2, 3, 5)]
    assert sums == ["q^5", "-q^5", "0"]
    fp = kl.canonical_fixed_point("432596178", "453697281", 3)
    assert [t for t in fp.leg1.labels] == [(8, 9), (6, 9), (4, 9), (2, 9)]
    image, fixed = kl.refined_reflect(fp, 3)
    assert fixed and image == fp


def test_graph():
    g = kl.bruhat_graph(3)
    assert g["schema"] == "kl-rpoly/1"
    assert len(g["nodes"]) == 6 and len(g["edges"]) == 9
    assert kl.bruhat_graph(3, "dot").startswith("digraph bruhat_S3 {")
