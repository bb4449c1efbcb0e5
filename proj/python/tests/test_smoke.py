import random

import pytest

import toricss


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_betti_and_e2_of_p2():
    p2 = toricss.catalog("projective_space(2)")
    assert toricss.betti(p2)["betti"] == ["1", "1", "1"]
    assert toricss.e2(p2)["anti_diagonals"] == [1, 0, 1, 0, 1]
    assert toricss.purity(p2)["purity"]


def test_kh_tables():
    t = toricss.kh_table(toricss.catalog("hirzebruch(1)"), 3)
    assert t["regime"] == "projective-simplicial"
    assert [r["terms"] for r in t["rows"]] == [[{"q": n, "mult": 4}] for n in range(4)]
    assert toricss.check_corollary_c(toricss.catalog("weighted_projective(1,1,2)"))["pass"]


def test_monoids():
    m = toricss.monoid((2,), (3,))
    assert toricss.normalization(m)["generators"] == [["1"]]
    report = toricss.conjecture_k0(m, 10)
    assert report["gap"]["elements"] == [["1"]]
    assert [c["verdict"] for c in report["clauses"][:2]] == ["pass", "pass"]
    assert toricss.seminormalization(toricss.monoid((2, 0), (0, 1), (1, 1)))["generators"] == [
        ["0", "1"], ["1", "1"], ["2", "0"]]


def test_polytopes():
    square = {"type": "polytope", "dim": 2, "points": [[0, 0], [1, 0], [0, 1], [1, 1]]}
    assert toricss.proj_lower_bounds(square) == {"n_P": 1, "splitting_count": 2, "vertex_count": 4}
    assert len(toricss.normal_fan(square)["max_cones"]) == 4


def test_smith_normal_form_random():
    rng = random.Random(11)
    for _ in range(20):
        a = [[rng.randint(-20, 20) for _ in range(rng.randint(1, 5))]]
        a += [[rng.randint(-20, 20) for _ in range(len(a[0]))] for _ in range(rng.randint(0, 4))]
        d, u, v = toricss.smith_normal_form(a)
        assert matmul(matmul(u, a), v) == d


def test_errors():
    with pytest.raises(toricss.SchemaError):
        toricss.betti({"type": "fan"})
    with pytest.raises(toricss.HypothesisError):
        toricss.betti(toricss.catalog("affine_orthant(2)"))
    with pytest.raises(toricss.HypothesisError):
        toricss.torsion_bound(1)
