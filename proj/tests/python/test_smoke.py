import math

import pytest
import specsat


def test_graph_roundtrip():
    g = specsat.Graph.from_graph6("Bw")
    assert g.n == 3
    assert g.edge_count() == 3
    assert g.graph6() == "Bw"
    assert specsat.Graph(3, [(0, 1), (1, 2), (0, 2)]) == g


def test_spectra():
    k43 = specsat.complete_multipartite([4, 3])
    res = specsat.spectral_radius(k43)
    assert abs(res["lambda"] - math.sqrt(12)) < 1e-10
    lo, hi = res["interval"]
    assert lo <= math.sqrt(12) <= hi
    assert abs(specsat.multipartite_lambda([3, 3]) - 3) < 1e-12
    y = specsat.family("Y", 40, 2, 2)
    z = specsat.zhang_lambda(y.base_sizes, ["M2"])
    assert abs(z - specsat.spectral_radius(y.graph)["lambda"]) < 1e-8


def test_counts():
    y = specsat.family("Y", 40, 2, 3)
    assert specsat.count_copies("K3", y.graph) == 60
    assert specsat.covering_number("K3", y.graph) == 3
    assert specsat.c_n_F(10, "K3") == 5
    assert specsat.walk_count(specsat.Graph.from_graph6("Bw"), 40) == 3 * 2**39
    assert len(specsat.enumerate_family(400, 2, 2)) == 3


def test_verify_and_errors():
    rep = specsat.verify("l-vs-t", {"n": 100, "r": 2, "q": 2})
    assert rep["theorem"] == "l-vs-t"
    assert rep["status"] in {"pass", "fail", "report"}
    assert "wallclock_ms" not in rep
    with pytest.raises(specsat.SpecsatError):
        specsat.family("Y", 10, 2, 3)
    with pytest.raises(ValueError):
        specsat.Graph.from_graph6("Bw!")
