import json

import pytest

from ribbonlab import (
    EnumerationLimitError,
    PROPERTIES,
    UnknownPropertyError,
    are_isomorphic,
    enumerate_graphs,
    graph_to_text,
    load_graph,
    predicate_implication_table,
    run_property_suite,
    search_converse_counterexample,
)

from helpers import FIXTURES

GOLDEN_CLASS_COUNTS = {0: 1, 1: 3, 2: 17, 3: 106, 4: 850}


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def test_zero_edges_single_graph():
    graphs = list(enumerate_graphs(0))
    assert len(graphs) == 1
    assert len(graphs[0].vertices) == 1 and not graphs[0].edges


def test_one_edge_classes():
    graphs = [g for g in enumerate_graphs(1) if g.edges]
    assert len(graphs) == 3
    loops = [g for g in graphs if len(g.vertices) == 1]
    assert len(loops) == 2  # untwisted and twisted loop
    assert len([g for g in graphs if len(g.vertices) == 2]) == 1


def test_golden_class_counts(universe3, universe4):
    counts = {}
    for g in universe4:
        counts[len(g.edges)] = counts.get(len(g.edges), 0) + 1
    assert counts == GOLDEN_CLASS_COUNTS
    assert len(universe3) == sum(GOLDEN_CLASS_COUNTS[k] for k in range(4))


def test_raw_counts():
    raw1 = list(enumerate_graphs(1, dedup=False))
    assert len(raw1) == 1 + 2 * 2  # the empty graph plus 2 rotations x 2 signs
    raw2 = [g for g in enumerate_graphs(2, dedup=False) if len(g.edges) == 2]
    assert len(raw2) == 24 * 4


def test_dedup_emits_pairwise_nonisomorphic(universe2):
    for i, g in enumerate(universe2):
        for h in universe2[i + 1 :]:
            if len(g.edges) == len(h.edges) and len(g.vertices) == len(h.vertices):
                assert not are_isomorphic(g, h)


def test_every_raw_graph_has_a_representative(universe2):
    keys = {graph_to_text(g): g for g in universe2}
    for raw in enumerate_graphs(2, dedup=False):
        assert any(are_isomorphic(raw, g) for g in universe2 if len(g.edges) == len(raw.edges))


def test_connected_filter():
    for g in enumerate_graphs(2, connected=True):
        from ribbonlab import connected_components

        assert len(connected_components(g)) == 1


def test_max_vertices_filter():
    graphs = list(enumerate_graphs(1, max_vertices=1))
    assert all(len(g.vertices) <= 1 for g in graphs)
    assert len([g for g in graphs if g.edges]) == 2


def test_extra_isolated_vertices():
    graphs = list(enumerate_graphs(1, extra_isolated=1))
    withedges = [g for g in graphs if g.edges]
    assert all(any(v.degree == 0 for v in g.vertices) for g in withedges)


def test_hard_cap():
    with pytest.raises(EnumerationLimitError):
        enumerate_graphs(7)


def test_enumeration_deterministic():
    run1 = [graph_to_text(g) for g in enumerate_graphs(2)]
    run2 = [graph_to_text(g) for g in enumerate_graphs(2)]
    assert run1 == run2


# ---------------------------------------------------------------------------
# property reports
# ---------------------------------------------------------------------------

def test_unknown_property_rejected():
    with pytest.raises(UnknownPropertyError):
        run_property_suite(enumerate_graphs(1), "not-a-property")


def test_report_shape_and_determinism():
    u = enumerate_graphs(2)
    r1 = run_property_suite(u, "checkerboard-implies-eulerian")
    r2 = run_property_suite(u, "checkerboard-implies-eulerian")
    assert r1.passed and r2.passed
    d1, d2 = r1.to_dict(), r2.to_dict()
    assert list(d1) == ["property", "params", "checked", "failures", "elapsed_ms"]
    d1.pop("elapsed_ms"), d2.pop("elapsed_ms")
    assert d1 == d2
    parsed = json.loads(r1.to_json())
    assert parsed["property"] == "checkerboard-implies-eulerian"
    assert parsed["failures"] == []


def test_workers_give_identical_reports():
    u = enumerate_graphs(1)
    r1 = run_property_suite(u, "arrow-roundtrip", workers=1).to_dict()
    r2 = run_property_suite(u, "arrow-roundtrip", workers=2).to_dict()
    r1.pop("elapsed_ms"), r2.pop("elapsed_ms")
    assert r1 == r2


def test_spec_named_properties_pass_small():
    u = enumerate_graphs(2)
    for name in (
        "checkerboard-implies-eulerian",
        "theorem1-endtoend",
        "petrial-orientable-implies-dual-eulerian",
    ):
        assert name in PROPERTIES
        assert run_property_suite(u, name).passed


def test_implication_table():
    table = predicate_implication_table(enumerate_graphs(2))
    assert table["graphs"] == 21
    holds = table["holds"]
    assert holds["checkerboard"]["eulerian"]
    assert holds["bipartite"]["even-face"]
    assert not holds["eulerian"]["checkerboard"]
    assert not holds["even-face"]["bipartite"]
    assert json.dumps(table)  # serializable


def test_failures_are_reported_with_witnesses(monkeypatch):
    from ribbonlab import workbench

    def always_fails(g):
        yield {"note": 1}, False, "deliberately failing check"

    monkeypatch.setitem(workbench.PROPERTIES, "always-fails", always_fails)
    report = run_property_suite(enumerate_graphs(1), "always-fails")
    assert not report.passed
    assert report.checked == 4 and len(report.failures) == 4
    first = report.failures[0]
    assert first.params == {"note": 1}
    assert "deliberately failing" in first.detail
    from ribbonlab import parse_graph

    assert parse_graph(first.graph) is not None  # witness is a loadable graph
    as_json = report.to_dict()
    assert as_json["failures"][0]["params"] == {"note": 1}


def test_cli_reports_failures_with_exit_one(monkeypatch, capsys):
    from ribbonlab import workbench
    from ribbonlab.cli import main

    def always_fails(g):
        yield {}, False, "deliberately failing check"

    monkeypatch.setitem(workbench.PROPERTIES, "always-fails", always_fails)
    code = main(["verify", "always-fails", "--max-edges", "0"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "witness" in out


# ---------------------------------------------------------------------------
# the converse counterexample search
# ---------------------------------------------------------------------------

def test_search_finds_and_verifies_witness():
    witness = search_converse_counterexample(enumerate_graphs(4))
    assert witness is not None
    assert witness.verify()
    assert len(witness.graph.edges) == 3
    assert witness.subset == ("e2",)
    stored = load_graph(FIXTURES / "converse_witness.rg")
    assert witness.graph == stored


def test_no_witness_below_three_edges():
    assert search_converse_counterexample(enumerate_graphs(2)) is None
