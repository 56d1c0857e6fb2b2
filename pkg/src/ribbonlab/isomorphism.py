"""Isomorphism of ribbon graphs and canonical forms for deduplication.

Two ribbon graphs are isomorphic when some bijection of vertices and edges,
combined with any set of vertex flips, carries rotations to rotations (up to
cyclic shift) and signs to signs.  The canonical form relabels darts along a
deterministic traversal and minimises the serialization over every choice of
start dart and flip assignment, so equality of canonical keys decides
isomorphism.  Everything here also runs on a bare dart-level encoding so the
enumerator can deduplicate without building graph objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Edge,
    EdgeEnd,
    RibbonGraph,
    Vertex,
    graph_to_text,
)

DartGraph = tuple[tuple[int, ...], tuple[int, ...], int]
"""(sigma, signs, isolated): sigma maps each dart to the next one around its
vertex, darts 2i and 2i+1 form edge i with sign signs[i], plus a count of
isolated vertices."""


def to_dart_graph(g: RibbonGraph) -> DartGraph:
    dart_of: dict[EdgeEnd, int] = {}
    for i, e in enumerate(g.edges):
        dart_of[EdgeEnd(e.name, 1)] = 2 * i
        dart_of[EdgeEnd(e.name, 2)] = 2 * i + 1
    sigma = [0] * (2 * len(g.edges))
    isolated = 0
    for v in g.vertices:
        rot = v.rotation
        if not rot:
            isolated += 1
            continue
        for j, d in enumerate(rot):
            sigma[dart_of[d]] = dart_of[rot[(j + 1) % len(rot)]]
    return tuple(sigma), tuple(e.sign for e in g.edges), isolated


def from_dart_graph(dg: DartGraph) -> RibbonGraph:
    """Materialise a dart-level encoding with generated names v0.., e0.. ."""
    sigma, signs, isolated = dg
    n = len(sigma)
    seen = [False] * n
    vertices: list[Vertex] = []
    vi = 0
    for d0 in range(n):
        if seen[d0]:
            continue
        cycle = []
        d = d0
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = sigma[d]
        rot = tuple(EdgeEnd(f"e{x // 2}", x % 2 + 1) for x in cycle)
        vertices.append(Vertex(f"v{vi}", rot))
        vi += 1
    for _ in range(isolated):
        vertices.append(Vertex(f"v{vi}"))
        vi += 1
    edges = tuple(Edge(f"e{i}", signs[i]) for i in range(n // 2))
    return RibbonGraph(tuple(vertices), edges)


def _components(sigma: tuple[int, ...]) -> list[list[int]]:
    n = len(sigma)
    seen = [False] * n
    out: list[list[int]] = []
    for d0 in range(n):
        if seen[d0]:
            continue
        comp = []
        stack = [d0]
        seen[d0] = True
        while stack:
            d = stack.pop()
            comp.append(d)
            for nb in (sigma[d], d ^ 1):
                if not seen[nb]:
                    seen[nb] = True
                    stack.append(nb)
        out.append(sorted(comp))
    return out


def _serialize(sigma_map: dict[int, int], signs_map: dict[int, int], start: int) -> tuple:
    ids = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nb in (sigma_map[d], d ^ 1):
            if nb not in ids:
                ids[nb] = len(ids)
                order.append(nb)
    return (
        tuple(ids[sigma_map[d]] for d in order),
        tuple(ids[d ^ 1] for d in order),
        tuple(signs_map[d >> 1] for d in order),
    )


def _component_key(sigma: tuple[int, ...], signs: tuple[int, ...], comp: list[int]) -> tuple:
    # vertices of the component, as sigma-cycles
    cycles: list[list[int]] = []
    placed: set[int] = set()
    for d0 in comp:
        if d0 in placed:
            continue
        cyc = []
        d = d0
        while d not in placed:
            placed.add(d)
            cyc.append(d)
            d = sigma[d]
        cycles.append(cyc)
    vertex_of = {d: ci for ci, cyc in enumerate(cycles) for d in cyc}
    edges = sorted({d >> 1 for d in comp})

    best: tuple | None = None
    for mask in range(1 << len(cycles)):
        smap: dict[int, int] = {}
        for ci, cyc in enumerate(cycles):
            if mask >> ci & 1:
                for j, d in enumerate(cyc):
                    smap[d] = cyc[j - 1]
            else:
                for j, d in enumerate(cyc):
                    smap[d] = cyc[(j + 1) % len(cyc)]
        gmap: dict[int, int] = {}
        for e in edges:
            f1 = mask >> vertex_of[2 * e] & 1
            f2 = mask >> vertex_of[2 * e + 1] & 1
            gmap[e] = -signs[e] if f1 != f2 else signs[e]
        for start in comp:
            key = _serialize(smap, gmap, start)
            if best is None or key < best:
                best = key
    assert best is not None
    return best


def canonical_key_darts(dg: DartGraph) -> tuple:
    sigma, signs, isolated = dg
    keys = sorted(_component_key(sigma, signs, comp) for comp in _components(sigma))
    return (tuple(keys), isolated)


def canonical_key(g: RibbonGraph) -> tuple:
    """A hashable complete isomorphism invariant."""
    return canonical_key_darts(to_dart_graph(g))


def canonical_graph(g: RibbonGraph) -> RibbonGraph:
    """A canonical representative of g's isomorphism class, with names v0.., e0.. ."""
    keys, isolated = canonical_key(g)
    # stitch component serializations back into one dart graph
    sigma: list[int] = []
    signs: list[int] = []
    offset = 0
    for S, T, G in keys:
        n = len(S)
        relabel = _edge_relabel(T)
        sigma.extend(_permute_component(S, T, G, relabel, offset, sigma, signs))
        offset += n
    return from_dart_graph((tuple(sigma[:]), tuple(signs), isolated))


def _edge_relabel(T: tuple[int, ...]) -> dict[int, int]:
    # map serialized dart -> global-convention dart so that edge darts pair as (2i, 2i+1)
    out: dict[int, int] = {}
    nxt = 0
    for d in range(len(T)):
        if d in out:
            continue
        out[d] = nxt
        out[T[d]] = nxt + 1
        nxt += 2
    return out


def _permute_component(S, T, G, relabel, offset, sigma_acc, signs_acc) -> list[int]:
    n = len(S)
    local = [0] * n
    for d in range(n):
        local[relabel[d]] = relabel[S[d]] + offset
    for d in range(n):
        if relabel[d] % 2 == 0:
            signs_acc.append(G[d])
    return local


def canonical_text(g: RibbonGraph) -> str:
    """The canonical representative's serialization; equal for isomorphic graphs."""
    return graph_to_text(canonical_graph(g))


def are_isomorphic(g: RibbonGraph, h: RibbonGraph, *, match_edge_labels: bool = False) -> bool:
    """Decide ribbon-graph isomorphism.

    With ``match_edge_labels`` the bijection on edges is forced to be the
    identity on names (vertices stay free), which is the right notion for
    identities that preserve edge labels by construction.
    """
    if len(g.edges) != len(h.edges) or len(g.vertices) != len(h.vertices):
        return False
    if not match_edge_labels:
        return canonical_key(g) == canonical_key(h)
    if sorted(g.edge_names) != sorted(h.edge_names):
        return False
    return _labelled_search(g, h)


def _labelled_search(g: RibbonGraph, h: RibbonGraph) -> bool:
    gsigns = g.signs()
    hsigns = h.signs()
    gv = sorted(g.vertices, key=lambda v: -v.degree)
    hv = list(h.vertices)

    def extend(i: int, used: set[int], flip: dict[str, bool], dart_map: dict[EdgeEnd, EdgeEnd]) -> bool:
        if i == len(gv):
            for name in g.edge_names:
                d1, d2 = EdgeEnd(name, 1), EdgeEnd(name, 2)
                if dart_map[d1].edge != name or dart_map[d2].edge != name:
                    return False
                if dart_map[d1] == dart_map[d2]:
                    return False
                u1 = g.vertex_of(d1)
                u2 = g.vertex_of(d2)
                toggled = (flip[u1] != flip[u2]) if u1 != u2 else False
                want = -gsigns[name] if toggled else gsigns[name]
                if hsigns[name] != want:
                    return False
            return True
        v = gv[i]
        for wi, w in enumerate(hv):
            if wi in used or w.degree != v.degree:
                continue
            m = v.degree
            if m == 0:
                if extend(i + 1, used | {wi}, {**flip, v.name: False}, dart_map):
                    return True
                continue
            for flipped in (False, True):
                rot = tuple(reversed(v.rotation)) if flipped else v.rotation
                for shift in range(m):
                    trial = dict(dart_map)
                    ok = True
                    for j in range(m):
                        src, dst = rot[j], w.rotation[(j + shift) % m]
                        if src.edge != dst.edge:
                            ok = False
                            break
                        if src in trial and trial[src] != dst:
                            ok = False
                            break
                        trial[src] = dst
                    if ok and extend(i + 1, used | {wi}, {**flip, v.name: flipped}, trial):
                        return True
        return False

    return extend(0, set(), {}, {})
