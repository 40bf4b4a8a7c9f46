import math

import pytest

import ultragrowth as ug


def test_gevrey_conditions():
    g = ug.gevrey(1.0, 512)
    assert g.truncation == 512
    assert g[10] == pytest.approx(math.lgamma(11))
    assert ug.check_sequence_condition(g, "M1").holds
    assert ug.check_sequence_condition(ug.gevrey(0.5, 512), "M0").status == "fails"


def test_roundtrip():
    g = ug.gevrey(0.5, 4096)
    w = ug.Weight("gevrey:0.5")
    back = ug.sequence_of_omega(w, 64)
    assert max(abs(a - b) for a, b in zip(back.log_values, g.log_values[:65])) < 1e-6


def test_weights_and_conjugate():
    w = ug.Weight("t^2")
    assert w.spec == "t^2"
    assert w(3.0) == pytest.approx(8.0)
    assert ug.young_conjugate(ug.Weight("logtrunc"), 0.5) == 0.0
    assert math.isinf(ug.young_conjugate(ug.Weight("logtrunc"), 2.0))
    assert ug.classify_triviality(w, "beurling") == "trivial"
    assert ug.classify_triviality(ug.Weight("t^1.5"), "beurling") == "nontrivial"
    with pytest.raises(ValueError):
        ug.Weight("cosh")


def test_matrix_and_relations():
    M = ug.matrix_of_weight(ug.Weight("t^2"), [0.5, 1.0, 2.0, 4.0], 128)
    assert sorted(M) == [0.5, 1.0, 2.0, 4.0]
    assert M[1.0][0] == 0.0
    v = ug.check_matrix_condition(M, "c37LR")
    assert v.holds
    G = {l: ug.gevrey(0.5, 128) for l in M}
    assert ug.relate_matrices(M, G, "roumieu").holds
    rep = ug.seq_relate(ug.gevrey(0.5, 512), ug.gevrey(1, 512), "preceq")
    assert rep["verdict"]["status"] == "holds"
    assert rep["verdict"]["witness"]["C"] == pytest.approx(1.0)


def test_oscillator():
    r = ug.oscillate("gevrey:0.5", 3, 6)
    ratios = [a["ratio"] for a in r["anchors"]]
    assert ratios[2:] == pytest.approx([8, 0.25, 32, 1 / 6], rel=1e-9)
    assert all(c["status"] == "holds" for c in r["checks"].values())


def test_norms():
    n = ug.lambda_norm({"kind": "weight_witness", "weight": "t^2", "support": 10000}, ug.Weight("t^2"))
    assert n["log_value"] == 0.0
    d = ug.empirical_domination(ug.Weight("t^2"), ug.Weight("t^1.5"))
    assert d["verdict"]["status"] == "holds"
    assert d["a"] <= 1.1


def test_invariants_suite():
    rep = ug.run_suite("invariants")
    assert rep["status"] == "holds"
    assert "generated-matrix-properties" in [c["key"] for c in rep["claims"]]
    with pytest.raises(ValueError):
        ug.run_suite("nope")
