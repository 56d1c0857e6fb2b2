"""Small-graph enumeration and the exhaustive property harness.

The enumerator generates every signed rotation system with up to a capped
number of edges: darts ``2i, 2i+1`` always form edge ``i``, every
permutation of the darts is a vertex structure (cycles are rotations), and
signs range over all vectors.  Up to relabelling that covers every ribbon
graph, so with deduplication by canonical form each isomorphism class is
produced exactly once, and without it every raw system appears.

Properties are registered by name; a run walks a universe in deterministic
order, counts instances (graphs, or graph/subset combinations) and collects
counterexamples as serialized witnesses.  Reports serialize to JSON with a
stable key order so runs can be diffed.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .core import (
    RibbonGraph,
    RibbonGraphError,
    euler_characteristic_by_component,
    flip_vertex,
    from_arrow_presentation,
    graph_to_text,
    is_orientable,
    parse_graph,
    to_arrow_presentation,
    trace_boundary,
)
from .isomorphism import (
    are_isomorphic,
    canonical_graph,
    canonical_key,
    canonical_key_darts,
    from_dart_graph,
)
from .algorithms import (
    checkerboard_partial_petrial,
    checkerboard_twisted_dual,
    has_alternating_boundary_orientation,
    orienting_petrial_set,
)
from .medial import (
    build_medial,
    classify_cd,
    d_edges,
    is_all_crossing,
    smooth,
    straight_ahead_direction,
)
from .operators import (
    apply_twist_word,
    contract,
    delete,
    geometric_dual,
    minor,
    partial_dual,
    partial_petrial,
    petrial,
)
from .predicates import (
    is_bipartite,
    is_checkerboard_colourable,
    is_eulerian,
    is_even_face,
)

HARD_EDGE_CAP = 6
SUBSET_EXHAUSTIVE_CAP = 3
SUBSET_SAMPLES = 8


class EnumerationLimitError(RibbonGraphError):
    pass


class UnknownPropertyError(RibbonGraphError):
    pass


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphUniverse:
    """Exhaustive iterator over small ribbon graphs.

    Every isomorphism class within the bounds appears at least once; with
    ``dedup`` exactly once.  Iteration order is deterministic.
    """

    max_edges: int
    max_vertices: int | None = None
    connected: bool = False
    dedup: bool = True
    extra_isolated: int = 0

    def __post_init__(self):
        if self.max_edges > HARD_EDGE_CAP:
            raise EnumerationLimitError(
                f"max_edges {self.max_edges} above the hard cap {HARD_EDGE_CAP}"
            )
        if self.max_edges < 0:
            raise EnumerationLimitError("max_edges must be nonnegative")
        if self.connected and self.extra_isolated:
            raise ValueError("a graph with extra isolated vertices is never connected")

    def params(self) -> dict:
        return {
            "max_edges": self.max_edges,
            "max_vertices": self.max_vertices,
            "connected": self.connected,
            "dedup": self.dedup,
            "extra_isolated": self.extra_isolated,
        }

    def __iter__(self) -> Iterator[RibbonGraph]:
        seen: set = set()
        for k in range(self.max_edges + 1):
            for dg in self._dart_graphs(k):
                sigma, signs, isolated = dg
                nverts = _cycle_count(sigma) + isolated
                if self.max_vertices is not None and nverts > self.max_vertices:
                    continue
                if self.connected and not _is_connected(sigma, isolated):
                    continue
                if self.dedup:
                    key = canonical_key_darts(dg)
                    if key in seen:
                        continue
                    seen.add(key)
                yield from_dart_graph(dg)

    def _dart_graphs(self, k: int):
        if k == 0:
            yield ((), (), 1 + self.extra_isolated)
            return
        sigmas = _minimal_sigma_reps(k) if self.dedup else itertools.permutations(range(2 * k))
        for sigma in sigmas:
            for signs in itertools.product((1, -1), repeat=k):
                yield (tuple(sigma), signs, self.extra_isolated)


def enumerate_graphs(
    max_edges: int,
    *,
    max_vertices: int | None = None,
    connected: bool = False,
    dedup: bool = True,
    extra_isolated: int = 0,
) -> GraphUniverse:
    return GraphUniverse(max_edges, max_vertices, connected, dedup, extra_isolated)


def sample_graphs(
    edges: int, count: int, *, seed: int = 0, eulerian: bool = False
) -> list[RibbonGraph]:
    """Deterministic random signed rotation systems at an exact edge count.

    Complements exhaustive enumeration where the class counts explode; with
    ``eulerian`` only graphs with all-even degrees are kept (rejection
    sampling).
    """
    if edges > HARD_EDGE_CAP:
        raise EnumerationLimitError(f"edges {edges} above the hard cap {HARD_EDGE_CAP}")
    rng = random.Random(f"sample:{edges}:{seed}")
    out: list[RibbonGraph] = []
    while len(out) < count:
        darts = list(range(2 * edges))
        rng.shuffle(darts)
        sigma = tuple(darts)
        if eulerian and not _all_cycles_even(sigma):
            continue
        signs = tuple(rng.choice((1, -1)) for _ in range(edges))
        out.append(from_dart_graph((sigma, signs, 0)))
    return out


def _all_cycles_even(sigma: tuple[int, ...]) -> bool:
    seen = [False] * len(sigma)
    for d0 in range(len(sigma)):
        if seen[d0]:
            continue
        length = 0
        d = d0
        while not seen[d]:
            seen[d] = True
            length += 1
            d = sigma[d]
        if length % 2:
            return False
    return True


def _cycle_count(sigma: tuple[int, ...]) -> int:
    seen = [False] * len(sigma)
    count = 0
    for d in range(len(sigma)):
        if seen[d]:
            continue
        count += 1
        while not seen[d]:
            seen[d] = True
            d = sigma[d]
    return count


def _is_connected(sigma: tuple[int, ...], isolated: int) -> bool:
    n = len(sigma)
    if n == 0:
        return isolated == 1
    if isolated:
        return False
    seen = [False] * n
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        d = stack.pop()
        for nb in (sigma[d], d ^ 1):
            if not seen[nb]:
                seen[nb] = True
                reached += 1
                stack.append(nb)
    return reached == n


_relabel_cache: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _relabelling_group(k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All dart relabellings preserving the pairing 2i <-> 2i+1, with
    inverses and positional weights for integer row encoding."""
    if k in _relabel_cache:
        return _relabel_cache[k]
    n = 2 * k
    rows = []
    for perm in itertools.permutations(range(k)):
        for mask in range(1 << k):
            g = [0] * n
            for i in range(k):
                swap = mask >> i & 1
                g[2 * i] = 2 * perm[i] + swap
                g[2 * i + 1] = 2 * perm[i] + 1 - swap
            rows.append(g)
    G = np.array(rows, dtype=np.int64)
    Ginv = np.empty_like(G)
    ar = np.arange(n)
    for r in range(G.shape[0]):
        Ginv[r, G[r]] = ar
    weights = np.array([16 ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    _relabel_cache[k] = (G, Ginv, weights)
    return G, Ginv, weights


def _minimal_sigma_reps(k: int) -> Iterator[tuple[int, ...]]:
    """Permutations that are minimal in their relabelling orbit.

    Conjugating the rotation permutation by a pairing-preserving dart
    relabelling gives the same ribbon graph with renamed edges and ends, so
    it suffices to keep the lexicographically least member of each orbit;
    canonical-form deduplication afterwards handles flips and anything the
    stabilizers leave over.
    """
    G, Ginv, weights = _relabelling_group(k)
    n = 2 * k
    for sigma in itertools.permutations(range(n)):
        arr = np.array(sigma, dtype=np.int64)
        conj = np.take_along_axis(G, arr[Ginv], axis=1)
        vals = conj @ weights
        if int(vals.min()) >= int(arr @ weights):
            yield sigma


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PropertyFailure:
    graph: str
    params: dict
    detail: str

    def to_dict(self) -> dict:
        return {"graph": self.graph, "params": self.params, "detail": self.detail}


@dataclass(frozen=True)
class PropertyReport:
    name: str
    universe: dict
    checked: int
    failures: tuple[PropertyFailure, ...]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "property": self.name,
            "params": self.universe,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        state = "pass" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: {state}, {self.checked} instances, {self.elapsed_ms:.0f} ms"


# ---------------------------------------------------------------------------
# Instance generators shared by the properties
# ---------------------------------------------------------------------------

def _edge_subsets(g: RibbonGraph) -> Iterator[tuple[str, ...]]:
    """Every subset for small graphs; a deterministic sample beyond."""
    names = sorted(g.edge_names)
    k = len(names)
    if k <= SUBSET_EXHAUSTIVE_CAP:
        for mask in range(1 << k):
            yield tuple(names[i] for i in range(k) if mask >> i & 1)
        return
    rng = random.Random(graph_to_text(g))
    masks = {0, (1 << k) - 1}
    while len(masks) < 2 + SUBSET_SAMPLES:
        masks.add(rng.randrange(1 << k))
    for mask in sorted(masks):
        yield tuple(names[i] for i in range(k) if mask >> i & 1)


def _disjoint_pairs(g: RibbonGraph) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Disjoint (B, C) pairs: all 3^k for small graphs, sampled beyond."""
    names = sorted(g.edge_names)
    k = len(names)
    if k <= SUBSET_EXHAUSTIVE_CAP:
        for assignment in itertools.product((0, 1, 2), repeat=k):
            b = tuple(names[i] for i in range(k) if assignment[i] == 1)
            c = tuple(names[i] for i in range(k) if assignment[i] == 2)
            yield b, c
        return
    rng = random.Random("pairs:" + graph_to_text(g))
    chosen = {(0,) * k}
    while len(chosen) < 1 + SUBSET_SAMPLES:
        chosen.add(tuple(rng.randrange(3) for _ in range(k)))
    for assignment in sorted(chosen):
        b = tuple(names[i] for i in range(k) if assignment[i] == 1)
        c = tuple(names[i] for i in range(k) if assignment[i] == 2)
        yield b, c


def _complement(g: RibbonGraph, subset: Iterable[str]) -> tuple[str, ...]:
    chosen = set(subset)
    return tuple(sorted(n for n in g.edge_names if n not in chosen))


Instance = tuple[dict, bool, str]


# ---------------------------------------------------------------------------
# The property catalogue
# ---------------------------------------------------------------------------

def _prop_boundary_partition(g: RibbonGraph) -> Iterator[Instance]:
    decomp = trace_boundary(g)
    segs = [s for c in decomp.components for s in c.segments]
    ok = len(segs) == 4 * len(g.edges) and len(set(segs)) == len(segs)
    yield {}, ok, "boundary walk must partition all half-edge segments"
    degs = decomp.face_degrees()
    yield {}, sum(degs) == 2 * len(g.edges), "face degrees must sum to twice the edge count"
    chis = euler_characteristic_by_component(g)
    yield {}, all(2 - chi >= 0 for chi in chis), "per-component Euler characteristic above 2"


def _prop_checkerboard_implies_eulerian(g: RibbonGraph) -> Iterator[Instance]:
    if is_checkerboard_colourable(g):
        yield {}, is_eulerian(g), "checkerboard colourable graph must be Eulerian"


def _prop_bipartite_implies_even_face(g: RibbonGraph) -> Iterator[Instance]:
    if is_bipartite(g):
        yield {}, is_even_face(g), "bipartite graph must be even-face"


def _prop_checkerboard_iff_dual_bipartite(g: RibbonGraph) -> Iterator[Instance]:
    lhs = is_checkerboard_colourable(g)
    rhs = is_bipartite(geometric_dual(g))
    yield {}, lhs == rhs, "checkerboard colourability must match bipartiteness of the dual"


def _prop_even_face_iff_dual_eulerian(g: RibbonGraph) -> Iterator[Instance]:
    yield {}, is_even_face(g) == is_eulerian(geometric_dual(g)), (
        "even-face must match Eulerian dual"
    )


def _prop_orientability_flip_invariant(g: RibbonGraph) -> Iterator[Instance]:
    base = is_orientable(g)
    for v in g.vertex_names:
        yield {"flip": v}, is_orientable(flip_vertex(g, v)) == base, (
            "orientability must be invariant under vertex flips"
        )


def _prop_flip_involution(g: RibbonGraph) -> Iterator[Instance]:
    for v in g.vertex_names:
        yield {"flip": v}, flip_vertex(flip_vertex(g, v), v) == g, "double flip must restore the graph"


def _prop_arrow_roundtrip(g: RibbonGraph) -> Iterator[Instance]:
    yield {}, from_arrow_presentation(to_arrow_presentation(g)) == g, (
        "arrow-presentation round trip must be the identity"
    )
    for v in g.vertex_names:
        h = flip_vertex(g, v)
        yield {"flip": v}, from_arrow_presentation(to_arrow_presentation(h)) == h, (
            "round trip must also hold after flips"
        )


def _prop_text_roundtrip(g: RibbonGraph) -> Iterator[Instance]:
    text = graph_to_text(g)
    yield {}, parse_graph(text) == g, "text round trip must reproduce the graph"
    canon = canonical_graph(g)
    ctext = graph_to_text(canon)
    yield {}, graph_to_text(parse_graph(ctext)) == ctext, (
        "canonical serializations must round trip bit-exactly"
    )


def _prop_canonical_stability(g: RibbonGraph) -> Iterator[Instance]:
    canon = canonical_graph(g)
    yield {}, canonical_key(canon) == canonical_key(g), "canonical graph must stay in the class"
    yield {}, canonical_graph(canon) == canon, "canonicalisation must be idempotent"
    for v in g.vertex_names:
        yield {"flip": v}, canonical_key(flip_vertex(g, v)) == canonical_key(g), (
            "canonical key must be flip-invariant"
        )


def _prop_petrial_involution(g: RibbonGraph) -> Iterator[Instance]:
    for a in _edge_subsets(g):
        yield {"A": list(a)}, partial_petrial(partial_petrial(g, a), a) == g, (
            "half-twisting twice must restore the graph exactly"
        )


def _prop_dual_involution(g: RibbonGraph) -> Iterator[Instance]:
    for a in _edge_subsets(g):
        again = partial_dual(partial_dual(g, a), a)
        yield {"A": list(a)}, are_isomorphic(again, g, match_edge_labels=True), (
            "dualising the same set twice must give an isomorphic graph"
        )


def _prop_pdual_disjoint_union(g: RibbonGraph) -> Iterator[Instance]:
    for b, c in _disjoint_pairs(g):
        lhs = partial_dual(g, b + c)
        rhs = partial_dual(partial_dual(g, b), c)
        yield {"A": list(b), "B": list(c)}, are_isomorphic(lhs, rhs, match_edge_labels=True), (
            "dualising a union must match dualising in stages"
        )


def _prop_delta_tau_commute(g: RibbonGraph) -> Iterator[Instance]:
    names = sorted(g.edge_names)
    for e1, e2 in itertools.permutations(names, 2):
        lhs = partial_petrial(partial_dual(g, [e1]), [e2])
        rhs = partial_dual(partial_petrial(g, [e2]), [e1])
        yield {"dual": e1, "twist": e2}, are_isomorphic(lhs, rhs, match_edge_labels=True), (
            "duals and twists on distinct edges must commute"
        )


def _prop_group_relations(g: RibbonGraph) -> Iterator[Instance]:
    for e in sorted(g.edge_names):
        h = g
        for _ in range(3):
            h = apply_twist_word(h, {e: "dt"})
        yield {"edge": e, "word": "(dt)^3"}, are_isomorphic(h, g, match_edge_labels=True), (
            "the sixth-order relation must act as the identity"
        )


def _prop_twist_word_grouping(g: RibbonGraph) -> Iterator[Instance]:
    names = sorted(g.edge_names)
    if len(names) > 2:
        names = names[:2]
    elements = ("1", "d", "t", "dt", "td", "dtd")
    for combo in itertools.product(elements, repeat=len(names)):
        word = dict(zip(names, combo))
        grouped = apply_twist_word(g, word)
        sequential = g
        for name in reversed(names):
            for op in reversed(word[name]):
                if op == "t":
                    sequential = partial_petrial(sequential, [name])
                elif op == "d":
                    sequential = partial_dual(sequential, [name])
        yield {"word": dict(word)}, are_isomorphic(grouped, sequential, match_edge_labels=True), (
            "grouped and sequential word application must agree"
        )


def _prop_minor_commute(g: RibbonGraph) -> Iterator[Instance]:
    for b, c in _disjoint_pairs(g):
        lhs = delete(contract(g, c), b)
        rhs = contract(delete(g, b), c)
        yield {"delete": list(b), "contract": list(c)}, are_isomorphic(
            lhs, rhs, match_edge_labels=True
        ), "deletion and contraction of disjoint sets must commute"


def _splice_contract_nonloop(g: RibbonGraph, name: str) -> RibbonGraph:
    """Independent contraction oracle for a non-loop edge: splice the two
    rotations at the edge, flipping one endpoint first if the edge is
    twisted."""
    e = g.edge(name)
    if e.sign < 0:
        u2 = g.vertex_of(e.ends[1])
        return _splice_contract_nonloop(flip_vertex(g, u2), name)
    d1, d2 = e.ends
    u1, u2 = g.vertex_of(d1), g.vertex_of(d2)
    assert u1 != u2
    r1 = g.vertex(u1).rotation
    r2 = g.vertex(u2).rotation
    i1, i2 = r1.index(d1), r2.index(d2)
    merged = r1[i1 + 1:] + r1[:i1] + r2[i2 + 1:] + r2[:i2]
    vertices = []
    for v in g.vertices:
        if v.name == u1:
            vertices.append(type(v)(v.name, merged))
        elif v.name == u2:
            continue
        else:
            vertices.append(v)
    return RibbonGraph(tuple(vertices), tuple(x for x in g.edges if x.name != name))


def _prop_contract_vs_splice(g: RibbonGraph) -> Iterator[Instance]:
    for e in sorted(g.edge_names):
        if g.is_loop(e):
            continue
        lhs = contract(g, [e])
        rhs = _splice_contract_nonloop(g, e)
        yield {"edge": e}, are_isomorphic(lhs, rhs, match_edge_labels=True), (
            "dual-route contraction must match direct splicing on non-loops"
        )


def _prop_pdual_minor_exchange(g: RibbonGraph) -> Iterator[Instance]:
    for a in _edge_subsets(g):
        aset = set(a)
        for b, c in _disjoint_pairs(g):
            lhs = partial_dual(minor(g, b, c), [x for x in a if x not in set(b) | set(c)])
            bp = tuple(sorted((set(b) - aset) | (set(c) & aset)))
            cp = tuple(sorted((set(c) - aset) | (set(b) & aset)))
            rhs = minor(partial_dual(g, a), bp, cp)
            yield {"A": list(a), "B": list(b), "C": list(c)}, are_isomorphic(
                lhs, rhs, match_edge_labels=True
            ), "partial duality must exchange deleted and contracted sets"


def _prop_pdual_deletion_identities(g: RibbonGraph) -> Iterator[Instance]:
    for a in _edge_subsets(g):
        comp = _complement(g, a)
        dual = partial_dual(g, a)
        lhs1 = geometric_dual(delete(g, comp))
        rhs1 = delete(dual, comp)
        yield {"A": list(a)}, are_isomorphic(lhs1, rhs1, match_edge_labels=True), (
            "dualising after deleting the complement must match deleting it from the partial dual"
        )
        lhs2 = geometric_dual(delete(geometric_dual(g), a))
        rhs2 = delete(dual, a)
        yield {"A": list(a)}, are_isomorphic(lhs2, rhs2, match_edge_labels=True), (
            "the dual-side deletion identity must hold"
        )


def _prop_pdual_bipartite_minors(g: RibbonGraph) -> Iterator[Instance]:
    for a in _edge_subsets(g):
        if not is_bipartite(partial_dual(g, a)):
            continue
        comp = _complement(g, a)
        m1 = geometric_dual(delete(g, comp))
        m2 = geometric_dual(delete(geometric_dual(g), a))
        ok = is_bipartite(m1) and is_bipartite(m2)
        yield {"A": list(a)}, ok, "bipartite partial dual forces bipartite minors"


def _prop_pdual_checkerboard_minors(g: RibbonGraph) -> Iterator[Instance]:
    for a in _edge_subsets(g):
        if not is_checkerboard_colourable(partial_dual(g, a)):
            continue
        comp = _complement(g, a)
        kept = delete(g, a)
        dual_kept = delete(geometric_dual(g), comp)
        ok = (
            is_checkerboard_colourable(kept)
            and is_eulerian(kept)
            and is_checkerboard_colourable(dual_kept)
            and is_eulerian(dual_kept)
        )
        yield {"A": list(a)}, ok, (
            "checkerboard partial dual forces checkerboard Eulerian minors"
        )


def _prop_boundary_criterion_equivalence(g: RibbonGraph) -> Iterator[Instance]:
    if not is_orientable(g):
        return
    for a in _edge_subsets(g):
        crit = has_alternating_boundary_orientation(g, a)
        colourable = is_checkerboard_colourable(partial_dual(g, a))
        yield {"A": list(a)}, crit == colourable, (
            "the boundary-orientation criterion must match dual colourability"
        )


def _prop_all_crossing(g: RibbonGraph) -> Iterator[Instance]:
    if not is_orientable(g):
        return
    m = build_medial(g)
    for seed in (0, 1):
        direction = straight_ahead_direction(m, seed=seed)
        yield {"seed": seed}, is_all_crossing(m, direction), (
            "straight-ahead directions must be all-crossing"
        )
        cls = classify_cd(m, direction)
        yield {"seed": seed}, set(cls) == set(g.edge_names) and all(
            v in ("c", "d") for v in cls.values()
        ), "crossing classification must be total"


def _prop_smoothing_signs(g: RibbonGraph) -> Iterator[Instance]:
    if not is_orientable(g):
        return
    m = build_medial(g)
    direction = straight_ahead_direction(m)
    cls = classify_cd(m, direction)
    curves = smooth(m, direction, cls)
    coherent = all(
        len({s.sign for s in curve.segments}) <= 1 for curve in curves
    )
    yield {}, coherent, "every smoothed curve must be all-positive or all-negative"
    by_edge: dict[str, list[int]] = {}
    for curve in curves:
        for s in curve.segments:
            by_edge.setdefault(s.edge, []).append(s.sign)
    ok = all(sorted(v) == [-1, 1] for v in by_edge.values())
    yield {}, ok and set(by_edge) == set(g.edge_names), (
        "each edge must get one positive and one negative smoothed strand"
    )


def _prop_curves_match_boundary(g: RibbonGraph) -> Iterator[Instance]:
    if not is_orientable(g):
        return
    m = build_medial(g)
    direction = straight_ahead_direction(m)
    cls = classify_cd(m, direction)
    curves = smooth(m, direction, cls)
    removed = d_edges(cls)
    decomp = trace_boundary(delete(m.host, removed))
    yield {"D": list(removed)}, len(curves) == decomp.count, (
        "smoothed curves must match boundary components of the d-deleted host"
    )
    # Each curve's kept-edge strands must form exactly the side pairs of one
    # boundary component.
    comp_keys = sorted(
        _side_pair_key(
            (comp.segments[i], comp.segments[i + 1])
            for i in range(0, len(comp.segments), 2)
        )
        for comp in decomp.components
    )
    curve_keys = sorted(
        _side_pair_key(
            (s.entry, s.exit) for s in curve.segments if s.kind == "edge-line"
        )
        for curve in curves
    )
    yield {"D": list(removed)}, comp_keys == curve_keys, (
        "curves must traverse exactly the ribbon sides of their boundary component"
    )


def _side_pair_key(pairs) -> tuple:
    return tuple(sorted(tuple(sorted(pair)) for pair in pairs))


def _prop_d_edges_eulerian_minors(g: RibbonGraph) -> Iterator[Instance]:
    if not is_orientable(g):
        return
    m = build_medial(g)
    cls = classify_cd(m, straight_ahead_direction(m))
    dset = d_edges(cls)
    comp = _complement(g, dset)
    ok = is_eulerian(delete(g, dset)) and is_eulerian(delete(geometric_dual(g), comp))
    yield {"D": list(dset)}, ok, "deleting d-edges must leave Eulerian graphs on both sides"


def _prop_petrial_orientable_dual_eulerian(g: RibbonGraph) -> Iterator[Instance]:
    if not is_orientable(petrial(g)):
        return
    yield {}, is_eulerian(geometric_dual(g)), (
        "an orientable Petrial forces an Eulerian dual"
    )


def _prop_theorem1_endtoend(g: RibbonGraph) -> Iterator[Instance]:
    cert = checkerboard_twisted_dual(g)
    yield {}, is_orientable(partial_petrial(g, cert.petrial_set)), (
        "the twist set must orientate the graph"
    )
    recomputed = partial_dual(partial_petrial(g, cert.petrial_set), cert.dual_set)
    yield {"A": list(cert.petrial_set), "D": list(cert.dual_set)}, are_isomorphic(
        recomputed, cert.result, match_edge_labels=True
    ), "the certificate must reproduce its result"
    yield {}, is_checkerboard_colourable(cert.result), (
        "the twisted dual must be checkerboard colourable"
    )
    via_word = apply_twist_word(g, cert.twist_word())
    yield {"word": cert.twist_word()}, are_isomorphic(
        via_word, cert.result, match_edge_labels=True
    ), "the certificate's twist word must carry the input to the result"


def _prop_theorem2_endtoend(g: RibbonGraph) -> Iterator[Instance]:
    if not is_eulerian(g):
        return
    for first in ("red", "blue"):
        cert = checkerboard_partial_petrial(g, first_colour=first)
        ok = (
            cert.result == partial_petrial(g, cert.twisted)
            and is_checkerboard_colourable(cert.result)
        )
        yield {"first_colour": first, "I": list(cert.twisted)}, ok, (
            "the twisted graph must be checkerboard colourable"
        )


def _prop_orienting_set(g: RibbonGraph) -> Iterator[Instance]:
    a = orienting_petrial_set(g)
    yield {"A": list(a)}, is_orientable(partial_petrial(g, a)), (
        "twisting the orienting set must give an orientable graph"
    )
    if is_orientable(g):
        yield {}, a == (), "orientable graphs must need no twists"


PROPERTIES: dict[str, Callable[[RibbonGraph], Iterator[Instance]]] = {
    "boundary-partition": _prop_boundary_partition,
    "checkerboard-implies-eulerian": _prop_checkerboard_implies_eulerian,
    "bipartite-implies-even-face": _prop_bipartite_implies_even_face,
    "checkerboard-iff-dual-bipartite": _prop_checkerboard_iff_dual_bipartite,
    "even-face-iff-dual-eulerian": _prop_even_face_iff_dual_eulerian,
    "orientability-flip-invariant": _prop_orientability_flip_invariant,
    "flip-involution": _prop_flip_involution,
    "arrow-roundtrip": _prop_arrow_roundtrip,
    "text-roundtrip": _prop_text_roundtrip,
    "canonical-stability": _prop_canonical_stability,
    "petrial-involution": _prop_petrial_involution,
    "dual-involution": _prop_dual_involution,
    "pdual-disjoint-union": _prop_pdual_disjoint_union,
    "delta-tau-commute": _prop_delta_tau_commute,
    "group-relations": _prop_group_relations,
    "twist-word-grouping": _prop_twist_word_grouping,
    "minor-commute": _prop_minor_commute,
    "contract-vs-splice": _prop_contract_vs_splice,
    "pdual-minor-exchange": _prop_pdual_minor_exchange,
    "pdual-deletion-identities": _prop_pdual_deletion_identities,
    "pdual-bipartite-minors": _prop_pdual_bipartite_minors,
    "pdual-checkerboard-minors": _prop_pdual_checkerboard_minors,
    "boundary-criterion-equivalence": _prop_boundary_criterion_equivalence,
    "all-crossing": _prop_all_crossing,
    "smoothing-signs": _prop_smoothing_signs,
    "curves-match-boundary": _prop_curves_match_boundary,
    "d-edges-eulerian-minors": _prop_d_edges_eulerian_minors,
    "petrial-orientable-implies-dual-eulerian": _prop_petrial_orientable_dual_eulerian,
    "orienting-set": _prop_orienting_set,
    "theorem1-endtoend": _prop_theorem1_endtoend,
    "theorem2-endtoend": _prop_theorem2_endtoend,
}


def _evaluate(name: str, text: str) -> tuple[int, list[PropertyFailure]]:
    g = parse_graph(text)
    checked = 0
    failures = []
    for params, ok, detail in PROPERTIES[name](g):
        checked += 1
        if not ok:
            failures.append(PropertyFailure(text, params, detail))
    return checked, failures


def run_property_suite(
    universe: GraphUniverse, selector: str, *, workers: int = 1
) -> PropertyReport:
    """Evaluate one named property over every graph in the universe."""
    if selector not in PROPERTIES:
        raise UnknownPropertyError(
            f"unknown property {selector!r}; known: {', '.join(sorted(PROPERTIES))}"
        )
    start = time.perf_counter()
    texts = [graph_to_text(g) for g in universe]
    checked = 0
    failures: list[PropertyFailure] = []
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            results = pool.starmap(_evaluate, [(selector, t) for t in texts])
    else:
        results = [_evaluate(selector, t) for t in texts]
    for c, f in results:
        checked += c
        failures.extend(f)
    elapsed = (time.perf_counter() - start) * 1000
    return PropertyReport(selector, universe.params(), checked, tuple(failures), elapsed)


def run_all_properties(
    universe: GraphUniverse, *, workers: int = 1
) -> list[PropertyReport]:
    return [run_property_suite(universe, name, workers=workers) for name in PROPERTIES]


def predicate_implication_table(universe: GraphUniverse) -> dict[str, dict]:
    """Empirical implication table for the four predicates over a universe."""
    names = ("bipartite", "even-face", "eulerian", "checkerboard")
    tests = {
        "bipartite": is_bipartite,
        "even-face": is_even_face,
        "eulerian": is_eulerian,
        "checkerboard": is_checkerboard_colourable,
    }
    counts = {p: {q: 0 for q in names} for p in names}
    total = 0
    for g in universe:
        total += 1
        values = {name: tests[name](g) for name in names}
        for p in names:
            for q in names:
                if values[p] and not values[q]:
                    counts[p][q] += 1
    return {
        "graphs": total,
        "counterexamples": counts,
        "holds": {p: {q: counts[p][q] == 0 for q in names} for p in names},
    }


# ---------------------------------------------------------------------------
# Counterexample search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConverseWitness:
    """A graph and subset where both dualised minors are bipartite but the
    partial dual itself is not."""

    graph: RibbonGraph
    subset: tuple[str, ...]

    def verify(self) -> bool:
        g, a = self.graph, self.subset
        comp = _complement(g, a)
        return (
            is_bipartite(geometric_dual(delete(g, comp)))
            and is_bipartite(geometric_dual(delete(geometric_dual(g), a)))
            and not is_bipartite(partial_dual(g, a))
        )


def search_converse_counterexample(universe: GraphUniverse) -> ConverseWitness | None:
    """First witness, in universe-then-subset order, or None within bounds."""
    for g in universe:
        names = sorted(g.edge_names)
        for mask in range(1 << len(names)):
            a = tuple(names[i] for i in range(len(names)) if mask >> i & 1)
            comp = _complement(g, a)
            if not is_bipartite(geometric_dual(delete(g, comp))):
                continue
            if not is_bipartite(geometric_dual(delete(geometric_dual(g), a))):
                continue
            if is_bipartite(partial_dual(g, a)):
                continue
            return ConverseWitness(g, a)
    return None
