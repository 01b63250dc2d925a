import itertools
import os
import subprocess

import pytest

import kedge


def triangle():
    return kedge.Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_graph_basics():
    g = kedge.Graph.parse("a b\nb c\n")
    assert g.order == 3
    assert g.edge_count == 2
    assert g.label(2) == "c"
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.complement().edge_count == 1


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        kedge.Graph.parse("0 0")


def test_solve_triangle():
    g = triangle()
    yes = kedge.solve(g, 3)
    assert yes and yes.witness == [0, 1, 2]
    assert yes.provenance is not None
    no = kedge.solve(g, 2)
    assert not no and no.witness is None


def test_solve_matches_enumeration():
    g = kedge.Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3)])
    for k in range(0, 8):
        found = any(
            sum(g.adjacent(u, v) for u, v in itertools.combinations(s, 2)) == k
            for size in range(1, 7)
            for s in itertools.combinations(range(6), size)
        )
        r = kedge.solve(g, k)
        assert r.yes == found
        if r.yes:
            assert kedge.verify_witness(g, r.witness, k)


def test_overridden_final_branch():
    cliques = [(u + 5 * c, v + 5 * c) for c in range(3) for u in range(5) for v in range(u + 1, 5)]
    g = kedge.Graph(15, cliques)
    out = kedge.decompose(g, 2, override_pk=2, override_d0=1, override_ramsey=2)
    assert out["kind"] == "split"
    assert out["invariant_problem"] is None
    assert kedge.solve(g, 2, override_pk=2, override_d0=1, override_ramsey=2).yes


def test_counting():
    g = triangle()
    assert kedge.count_eis(g, 1) == 3
    assert kedge.count_eis_nice(g, 0) == 0
    p3 = kedge.Graph(3, [(0, 1), (1, 2)])
    assert kedge.count_independent_sets(p3, 2) == 1
    assert kedge.count_is_via_reduction(p3, 2) == 1
    with pytest.raises(kedge.GuardExceeded):
        kedge.count_eis(kedge.Graph(30), 0)


def test_arithmetic_and_thresholds():
    assert kedge.eureka(10) == (4, 3, 2)
    assert kedge.max_triangular_le(5) == (3, 2)
    t = kedge.Thresholds(1)
    assert (t.p_k, t.b_cap, t.d0) == (4, 252, 508)
    assert kedge.Thresholds(12).p_k == 2**24
    assert kedge.Thresholds(1, override_pk=2).b_cap == 2


def test_structure_helpers():
    star = kedge.Graph(6, [(0, i) for i in range(1, 6)])
    assert kedge.is_degree_extreme(star, 1)
    p5 = kedge.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert kedge.is_scattered(p5, [0, 4], 2, 3)
    assert not kedge.is_scattered(p5, [0, 2], 2, 2)


@pytest.mark.skipif(not os.environ.get("KEDGE_CLI"), reason="CLI binary not provided")
def test_cli_round_trip(tmp_path):
    cli = os.environ["KEDGE_CLI"]
    graph = tmp_path / "k3.txt"
    graph.write_text("0 1\n1 2\n0 2\n")
    out = subprocess.run([cli, "solve", "--input", str(graph), "--k", "3", "--format", "structured"],
                         capture_output=True, text=True, check=True).stdout
    assert "answer: yes" in out
    assert "witness: 0 1 2" in out
    bad = subprocess.run([cli, "count", "--input", str(tmp_path / "missing")], capture_output=True, text=True)
    assert bad.returncode == 1
