import itertools

import pytest
from hypothesis import given, strategies as st

from ribbonlab import (
    TWIST_ELEMENTS,
    UnknownEdgeError,
    apply_twist_word,
    are_isomorphic,
    contract,
    delete,
    geometric_dual,
    is_checkerboard_colourable,
    minor,
    parse_graph,
    partial_dual,
    partial_petrial,
    petrial,
    trace_boundary,
    twist_compose,
)

from helpers import graph


# ---------------------------------------------------------------------------
# deletion
# ---------------------------------------------------------------------------

def test_delete_all_leaves_isolated_vertices():
    g = delete(graph("torus"), ["a", "b"])
    assert len(g.edges) == 0
    assert [v.degree for v in g.vertices] == [0]


def test_delete_nothing_is_identity():
    g = graph("torus")
    assert delete(g, []) == g


def test_delete_one_of_parallel_pair():
    g = delete(graph("digon"), ["b"])
    assert g.edge_names == ("a",)
    assert trace_boundary(g).count == 1


def test_delete_unknown_edge():
    with pytest.raises(UnknownEdgeError):
        delete(graph("loop"), ["nope"])


# ---------------------------------------------------------------------------
# half twists
# ---------------------------------------------------------------------------

def test_half_twist_untwists():
    assert partial_petrial(graph("twisted_loop"), ["a"]) == graph("loop")


def test_half_twist_involution(universe2):
    for g in universe2:
        names = sorted(g.edge_names)
        for r in range(len(names) + 1):
            for subset in itertools.combinations(names, r):
                assert partial_petrial(partial_petrial(g, subset), subset) == g


def test_petrial_twists_everything():
    g = petrial(graph("torus"))
    assert all(e.sign == -1 for e in g.edges)
    assert is_checkerboard_colourable(g)


# ---------------------------------------------------------------------------
# partial duality
# ---------------------------------------------------------------------------

def test_partial_dual_empty_set_is_identity():
    g = graph("torus")
    assert partial_dual(g, []) is g


def test_dual_of_planar_loop_is_an_edge():
    d = geometric_dual(graph("loop"))
    assert are_isomorphic(d, graph("path2"), match_edge_labels=True)
    assert len(d.vertices) == 2


def test_dual_swaps_vertices_and_faces(universe2):
    for g in universe2:
        d = geometric_dual(g)
        assert len(d.vertices) == trace_boundary(g).count
        assert trace_boundary(d).count == len(g.vertices)


def test_dual_vertex_labels_fresh():
    d = geometric_dual(graph("torus"))
    assert all(name.startswith("v") for name in d.vertex_names)
    assert d.edge_names == ("a", "b")


def test_dual_involution(universe2):
    for g in universe2:
        names = sorted(g.edge_names)
        for r in range(len(names) + 1):
            for subset in itertools.combinations(names, r):
                again = partial_dual(partial_dual(g, subset), subset)
                assert are_isomorphic(again, g, match_edge_labels=True)


def test_partial_dual_in_stages(universe2):
    for g in universe2:
        names = sorted(g.edge_names)
        if len(names) < 2:
            continue
        a, b = names[:2]
        lhs = partial_dual(g, [a, b])
        rhs = partial_dual(partial_dual(g, [a]), [b])
        assert are_isomorphic(lhs, rhs, match_edge_labels=True)


def test_torus_partial_dual_is_checkerboard():
    h = partial_dual(graph("torus"), ["b"])
    assert trace_boundary(h).count == 2
    assert is_checkerboard_colourable(h)


# ---------------------------------------------------------------------------
# contraction and minors
# ---------------------------------------------------------------------------

def test_contract_planar_loop_gives_two_isolated_vertices():
    g = contract(graph("loop"), ["a"])
    assert len(g.edges) == 0 and len(g.vertices) == 2
    assert all(v.degree == 0 for v in g.vertices)


def test_contract_twisted_loop_gives_one_isolated_vertex():
    g = contract(graph("twisted_loop"), ["a"])
    assert len(g.edges) == 0 and len(g.vertices) == 1


def test_contract_nonloop_merges_vertices():
    g = parse_graph(
        "vertex u: a.1 b.1\nvertex v: a.2 c.1\nvertex w: b.2 c.2\n"
        "edge a: +\nedge b: +\nedge c: +\n"
    )
    h = contract(g, ["a"])
    assert len(h.vertices) == 2 and sorted(h.edge_names) == ["b", "c"]


def test_contract_nothing_is_identity():
    g = graph("torus")
    assert contract(g, []) == g


def test_minor_rejects_overlap():
    with pytest.raises(ValueError):
        minor(graph("torus"), ["a"], ["a"])


def test_minor_of_nothing_is_identity():
    g = graph("torus")
    assert minor(g, [], []) == g


def test_minor_order_immaterial(universe2):
    for g in universe2:
        names = sorted(g.edge_names)
        if len(names) < 2:
            continue
        b, c = [names[0]], [names[1]]
        lhs = delete(contract(g, c), b)
        rhs = contract(delete(g, b), c)
        assert are_isomorphic(lhs, rhs, match_edge_labels=True)


# ---------------------------------------------------------------------------
# twist words
# ---------------------------------------------------------------------------

def test_twist_compose_relations():
    assert twist_compose("d", "d") == "1"
    assert twist_compose("t", "t") == "1"
    assert twist_compose("d", "t") == "dt"
    assert twist_compose("dt", "dt") == twist_compose("td", "1") == "td"
    x = "1"
    for _ in range(3):
        x = twist_compose("dt", x)
    assert x == "1"
    assert twist_compose("dtd", "dtd") == "1"
    assert len({twist_compose(a, b) for a in TWIST_ELEMENTS for b in TWIST_ELEMENTS}) == 6


def test_identity_word_is_identity():
    g = graph("torus")
    assert apply_twist_word(g, {"a": "1", "b": "1"}) == g


def test_all_dual_word_is_geometric_dual():
    g = graph("torus")
    assert apply_twist_word(g, {"a": "d", "b": "d"}) == geometric_dual(g)


def test_all_twist_word_is_petrial():
    g = graph("torus")
    assert apply_twist_word(g, {"a": "t", "b": "t"}) == petrial(g)


def test_sixth_power_of_dt_is_identity(universe2):
    for g in universe2:
        for e in sorted(g.edge_names):
            h = g
            for _ in range(3):
                h = apply_twist_word(h, {e: "dt"})
            assert are_isomorphic(h, g, match_edge_labels=True)


def test_word_validation():
    with pytest.raises(ValueError):
        apply_twist_word(graph("loop"), {"a": "x"})
    with pytest.raises(UnknownEdgeError):
        apply_twist_word(graph("loop"), {"zz": "d"})


def test_duals_and_twists_commute_on_distinct_edges(universe2):
    for g in universe2:
        names = sorted(g.edge_names)
        if len(names) < 2:
            continue
        e1, e2 = names[:2]
        lhs = partial_petrial(partial_dual(g, [e1]), [e2])
        rhs = partial_dual(partial_petrial(g, [e2]), [e1])
        assert are_isomorphic(lhs, rhs, match_edge_labels=True)


@given(data=st.data())
def test_random_words_respect_composition(universe2, data):
    g = data.draw(st.sampled_from([x for x in universe2 if x.edges]))
    names = sorted(g.edge_names)
    w1 = {n: data.draw(st.sampled_from(TWIST_ELEMENTS)) for n in names}
    w2 = {n: data.draw(st.sampled_from(TWIST_ELEMENTS)) for n in names}
    combined = {n: twist_compose(w2[n], w1[n]) for n in names}
    lhs = apply_twist_word(apply_twist_word(g, w1), w2)
    rhs = apply_twist_word(g, combined)
    assert are_isomorphic(lhs, rhs, match_edge_labels=True)


def test_involutions_and_minor_exchange_on_random_larger_graphs():
    import random

    from ribbonlab import minor, sample_graphs

    rng = random.Random(11)
    for k in (4, 5, 6):
        for g in sample_graphs(k, 6, seed=4):
            names = sorted(g.edge_names)
            subset = tuple(n for n in names if rng.random() < 0.5)
            assert partial_petrial(partial_petrial(g, subset), subset) == g
            again = partial_dual(partial_dual(g, subset), subset)
            assert are_isomorphic(again, g, match_edge_labels=True)
            lot = [rng.randrange(3) for _ in names]
            b = tuple(n for n, x in zip(names, lot) if x == 1)
            c = tuple(n for n, x in zip(names, lot) if x == 2)
            aset = set(subset)
            lhs = partial_dual(minor(g, b, c), [x for x in subset if x not in set(b) | set(c)])
            bp = tuple(sorted((set(b) - aset) | (set(c) & aset)))
            cp = tuple(sorted((set(c) - aset) | (set(b) & aset)))
            rhs = minor(partial_dual(g, subset), bp, cp)
            assert are_isomorphic(lhs, rhs, match_edge_labels=True)


@given(data=st.data())
def test_random_subset_dual_involution(universe2, data):
    g = data.draw(st.sampled_from(universe2))
    subset = data.draw(st.lists(st.sampled_from(sorted(g.edge_names) or [""]), unique=True))
    subset = [s for s in subset if s]
    again = partial_dual(partial_dual(g, subset), subset)
    assert are_isomorphic(again, g, match_edge_labels=True)
