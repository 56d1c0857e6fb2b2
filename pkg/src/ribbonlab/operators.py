"""The twisted-duality operator algebra.

Per-edge operations: deletion, contraction, half-twisting (partial Petrial)
and partial duality, plus arbitrary per-edge words in the six-element group
generated by the dual ``d`` and the twist ``t`` subject to
``dd = tt = (dt)^3 = 1``.  The full geometric dual and Petrial are the
all-edge specialisations.

Partial duality is computed through the arrow presentation: the two arrows
of the edge are removed together with the arcs beneath them, and two fresh
labelled arrows are spliced in joining head-to-tail crosswise.  Contraction
is defined from it (contract = dualise then delete), which handles loops
and twisted loops with no special cases.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .core import (
    Arrow,
    ArrowPresentation,
    Circle,
    Edge,
    RibbonGraph,
    UnknownEdgeError,
    Vertex,
    from_arrow_presentation,
    require_valid,
    to_arrow_presentation,
)

# ---------------------------------------------------------------------------
# The per-edge group
# ---------------------------------------------------------------------------

#: The six per-edge twist words; ``dt`` means "twist first, then dualise".
TWIST_ELEMENTS = ("1", "d", "t", "dt", "td", "dtd")

_PERM = {
    "1": (0, 1, 2),
    "d": (1, 0, 2),
    "t": (0, 2, 1),
    "dt": (1, 2, 0),
    "td": (2, 0, 1),
    "dtd": (2, 1, 0),
}
_NAME = {perm: name for name, perm in _PERM.items()}

TwistWord = Mapping[str, str]


def twist_compose(after: str, before: str) -> str:
    """The word acting as ``before`` followed by ``after``."""
    pa, pb = _PERM[after], _PERM[before]
    return _NAME[tuple(pa[pb[i]] for i in range(3))]


def _check_edges(g: RibbonGraph, edges: Iterable[str]) -> tuple[str, ...]:
    known = set(g.edge_names)
    out = tuple(sorted(set(edges)))
    for name in out:
        if name not in known:
            raise UnknownEdgeError(name)
    return out


# ---------------------------------------------------------------------------
# Deletion and half-twisting
# ---------------------------------------------------------------------------

def delete(g: RibbonGraph, edges: Iterable[str]) -> RibbonGraph:
    """Remove the edges; vertices stay (possibly becoming isolated)."""
    require_valid(g)
    gone = set(_check_edges(g, edges))
    vertices = tuple(
        Vertex(v.name, tuple(d for d in v.rotation if d.edge not in gone))
        for v in g.vertices
    )
    return RibbonGraph(vertices, tuple(e for e in g.edges if e.name not in gone))


def partial_petrial(g: RibbonGraph, edges: Iterable[str]) -> RibbonGraph:
    """Add a half-twist to each listed edge (toggle its sign); an involution."""
    require_valid(g)
    chosen = set(_check_edges(g, edges))
    return RibbonGraph(
        g.vertices,
        tuple(Edge(e.name, -e.sign if e.name in chosen else e.sign) for e in g.edges),
    )


def petrial(g: RibbonGraph) -> RibbonGraph:
    return partial_petrial(g, g.edge_names)


# ---------------------------------------------------------------------------
# Partial duality via the arrow presentation
# ---------------------------------------------------------------------------

def _arc_splice(p: ArrowPresentation, label: str) -> ArrowPresentation:
    """Replace the two ``label`` arrows by crosswise head-to-tail arrows and
    re-trace the circles."""
    instances: list[tuple[int, Arrow]] = []  # (point base, arrow), scan order
    per_circle: list[list[int]] = []
    plain_at: dict[int, int] = {}
    arc_at: dict[int, tuple[int, str, bool]] = {}
    base = 0
    for c in p.circles:
        idxs = []
        for a in c.arrows:
            instances.append((base, a))
            idxs.append(base)
            base += 2
        per_circle.append(idxs)

    def tail(b: int) -> int:
        return b

    def head(b: int) -> int:
        return b + 1

    # plain arcs join the circle-sense end of one arrow to the start of the next
    for c, idxs in zip(p.circles, per_circle):
        m = len(idxs)
        for i in range(m):
            a = c.arrows[i]
            nxt = c.arrows[(i + 1) % m]
            e_pt = head(idxs[i]) if a.forward else tail(idxs[i])
            s_pt = tail(idxs[(i + 1) % m]) if nxt.forward else head(idxs[(i + 1) % m])
            plain_at[e_pt] = s_pt
            plain_at[s_pt] = e_pt

    moved = [(b, a) for b, a in instances if a.label == label]
    assert len(moved) == 2
    (b1, _), (b2, _) = moved
    for b, a in instances:
        if a.label == label:
            continue
        arc_at[tail(b)] = (head(b), a.label, True)
        arc_at[head(b)] = (tail(b), a.label, False)
    arc_at[head(b1)] = (tail(b2), label, True)
    arc_at[tail(b2)] = (head(b1), label, False)
    arc_at[head(b2)] = (tail(b1), label, True)
    arc_at[tail(b1)] = (head(b2), label, False)

    circles: list[Circle] = []
    visited: set[int] = set()
    for p0 in range(base):
        if p0 in visited:
            continue
        arrows: list[Arrow] = []
        cur = p0
        while True:
            other, lbl, fwd = arc_at[cur]
            arrows.append(Arrow(lbl, fwd))
            visited.add(cur)
            visited.add(other)
            cur = plain_at[other]
            if cur == p0:
                break
        circles.append(Circle(f"c{len(circles)}", tuple(arrows)))
    for c in p.circles:
        if not c.arrows:
            circles.append(c)
    return ArrowPresentation(tuple(circles))


def partial_dual(g: RibbonGraph, edges: Iterable[str]) -> RibbonGraph:
    """Dualise along the listed edges only.

    Edge labels survive; vertex labels of the result are freshly generated
    (``v0``, ``v1``, ... in splice-trace order) since the new vertices mix
    vertex and face identities of the input.  ``partial_dual(g, [])`` is
    ``g`` itself, and dualising the same set twice gives a graph isomorphic
    to ``g``.
    """
    require_valid(g)
    chosen = _check_edges(g, edges)
    if not chosen:
        return g
    pres = to_arrow_presentation(g)
    for name in chosen:
        pres = _arc_splice(pres, name)
    renamed = ArrowPresentation(
        tuple(Circle(f"v{i}", c.arrows) for i, c in enumerate(pres.circles))
    )
    return from_arrow_presentation(renamed)


def geometric_dual(g: RibbonGraph) -> RibbonGraph:
    return partial_dual(g, g.edge_names)


# ---------------------------------------------------------------------------
# Contraction, minors, twist words
# ---------------------------------------------------------------------------

def contract(g: RibbonGraph, edges: Iterable[str]) -> RibbonGraph:
    """Contract edges via dualise-then-delete; twisted loops need no special case."""
    chosen = _check_edges(g, edges)
    return delete(partial_dual(g, chosen), chosen)


def minor(g: RibbonGraph, deleted: Iterable[str], contracted: Iterable[str]) -> RibbonGraph:
    """Delete one edge set and contract a disjoint one; order is immaterial."""
    dset = set(deleted)
    cset = set(contracted)
    overlap = dset & cset
    if overlap:
        raise ValueError(f"cannot both delete and contract: {sorted(overlap)}")
    return delete(contract(g, cset), dset)


def apply_twist_word(g: RibbonGraph, word: TwistWord) -> RibbonGraph:
    """Apply a per-edge word; missing edges mean the identity.

    Edges are grouped by element and each group's word runs right to left
    (``dt`` twists first, then dualises).  Actions on distinct edges
    commute, so the grouping order does not matter.
    """
    _check_edges(g, word.keys())
    for name, elem in word.items():
        if elem not in TWIST_ELEMENTS:
            raise ValueError(f"unknown twist word {elem!r} for edge {name!r}")
    out = g
    for elem in TWIST_ELEMENTS:
        group = sorted(name for name, w in word.items() if w == elem)
        if not group or elem == "1":
            continue
        for op in reversed(elem):
            if op == "t":
                out = partial_petrial(out, group)
            else:
                out = partial_dual(out, group)
    return out
