"""Signed rotation systems: the canonical in-memory form of a ribbon graph.

A ribbon graph is stored as a cyclic order of edge-ends around each vertex
plus a twist sign per edge (+1 untwisted, -1 half-twisted).  This module
holds the data model, structural validation, boundary tracing (faces),
orientability, vertex flips, the arrow-presentation view and the plain-text
file format.

Conventions used throughout (all derived ones are pinned by round-trip and
involution identities exercised in the test suite):

* Rotations are read counterclockwise.  The two half-edge segments at an
  edge-end are labelled by side: ``R`` faces the next edge-end in rotation
  order, ``L`` faces the previous one.
* Crossing an untwisted ribbon swaps the side letter; crossing a twisted
  ribbon keeps it.  (Letters are relative to each vertex's own rotation
  sense, and the two ends of a flat ribbon see opposite senses.)
* Arrow presentations mark an edge untwisted exactly when its two arrows
  point the same way relative to their circles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

L = "L"
R = "R"
_OTHER_SIDE = {L: R, R: L}


class RibbonGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(RibbonGraphError):
    """A structurally broken rotation system was passed where a valid one is required."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = tuple(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"invalid ribbon graph: {lines}")


class UnknownVertexError(RibbonGraphError):
    pass


class UnknownEdgeError(RibbonGraphError):
    pass


class MalformedPresentationError(RibbonGraphError):
    """An arrow presentation that does not carry every label exactly twice."""


class NotOrientableError(RibbonGraphError):
    """An orientable graph was required."""


class TextFormatError(RibbonGraphError):
    """Parse error in the graph text format, with position information."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True, order=True)
class EdgeEnd:
    """One of the two ends of an edge ribbon; ``end`` is 1 or 2."""

    edge: str
    end: int

    @property
    def partner(self) -> "EdgeEnd":
        return EdgeEnd(self.edge, 3 - self.end)

    def __str__(self) -> str:
        return f"{self.edge}.{self.end}"


@dataclass(frozen=True, order=True)
class HalfEdgeSegment:
    """One quarter of a ribbon boundary: an edge-end plus a side letter.

    There are exactly four per edge and two per edge-end.  These are the
    states walked by :func:`trace_boundary`.
    """

    end: EdgeEnd
    side: str

    def __str__(self) -> str:
        return f"{self.end}{self.side}"


@dataclass(frozen=True)
class Edge:
    name: str
    sign: int = 1

    @property
    def ends(self) -> tuple[EdgeEnd, EdgeEnd]:
        return (EdgeEnd(self.name, 1), EdgeEnd(self.name, 2))


@dataclass(frozen=True)
class Vertex:
    name: str
    rotation: tuple[EdgeEnd, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.rotation)


@dataclass(frozen=True)
class RibbonGraph:
    """An immutable ribbon graph; all operations return new graphs.

    Vertex order is meaningful (it drives serialization); edges are always
    stored sorted by name, so graphs that differ only in edge declaration
    order compare equal.
    """

    vertices: tuple[Vertex, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda e: e.name))
        )

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.edges)

    @property
    def vertex_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    def vertex(self, name: str) -> Vertex:
        for v in self.vertices:
            if v.name == name:
                return v
        raise UnknownVertexError(name)

    def edge(self, name: str) -> Edge:
        for e in self.edges:
            if e.name == name:
                return e
        raise UnknownEdgeError(name)

    def sign(self, edge: str) -> int:
        return self.edge(edge).sign

    def signs(self) -> dict[str, int]:
        return {e.name: e.sign for e in self.edges}

    def degree(self, vertex: str) -> int:
        return self.vertex(vertex).degree

    def vertex_of(self, end: EdgeEnd) -> str:
        for v in self.vertices:
            if end in v.rotation:
                return v.name
        raise UnknownEdgeError(str(end))

    def is_loop(self, edge: str) -> bool:
        e1, e2 = Edge(edge).ends
        return self.vertex_of(e1) == self.vertex_of(e2)

    def __str__(self) -> str:
        return graph_to_text(self)


def ribbon_graph(
    rotations: Mapping[str, Iterable[EdgeEnd | str]],
    signs: Mapping[str, int] | None = None,
) -> RibbonGraph:
    """Build a graph from ``{vertex: [edge ends]}`` plus a sign per edge.

    Edge ends may be given as ``EdgeEnd`` or as strings like ``"a.1"``.
    Edges missing from ``signs`` default to +1; edge order follows first
    appearance in the rotations, then the ``signs`` mapping.
    """
    signs = dict(signs or {})
    vertices = []
    seen: list[str] = []
    for vname, rot in rotations.items():
        ends = []
        for item in rot:
            end = _parse_end(item) if isinstance(item, str) else item
            ends.append(end)
            if end.edge not in seen:
                seen.append(end.edge)
        vertices.append(Vertex(vname, tuple(ends)))
    for name in signs:
        if name not in seen:
            seen.append(name)
    edges = tuple(Edge(name, signs.get(name, 1)) for name in seen)
    return RibbonGraph(tuple(vertices), edges)


def _parse_end(token: str) -> EdgeEnd:
    name, _, endpart = token.rpartition(".")
    if not name or endpart not in ("1", "2"):
        raise ValueError(f"bad edge-end token {token!r}, expected '<edge>.1' or '<edge>.2'")
    return EdgeEnd(name, int(endpart))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str
    message: str


def validate(g: RibbonGraph) -> list[Violation]:
    """Check every structural invariant; empty list means the graph is valid."""
    out: list[Violation] = []
    vnames = [v.name for v in g.vertices]
    if len(set(vnames)) != len(vnames):
        out.append(Violation("duplicate-vertex", "duplicate vertex name"))
    enames = [e.name for e in g.edges]
    if len(set(enames)) != len(enames):
        out.append(Violation("duplicate-edge", "duplicate edge name"))
    known = set(enames)
    for e in g.edges:
        if e.sign not in (1, -1):
            out.append(Violation("bad-sign", f"edge {e.name} has sign {e.sign!r}, expected +1 or -1"))

    placed: dict[EdgeEnd, int] = {}
    for v in g.vertices:
        for d in v.rotation:
            if d.end not in (1, 2):
                out.append(Violation("bad-end-index", f"edge-end {d} at vertex {v.name} has end index {d.end}"))
                continue
            if d.edge not in known:
                out.append(Violation("unknown-edge-end", f"edge-end {d} at vertex {v.name} names no declared edge"))
                continue
            placed[d] = placed.get(d, 0) + 1
            if placed[d] == 2:
                out.append(Violation("duplicate-edge-end", f"edge-end {d} appears more than once"))
    for e in g.edges:
        for d in e.ends:
            if placed.get(d, 0) == 0:
                out.append(Violation("unplaced-edge-end", f"edge-end {d} appears in no vertex rotation"))
    return out


def require_valid(g: RibbonGraph) -> None:
    violations = validate(g)
    if violations:
        raise InvalidGraphError(violations)


# ---------------------------------------------------------------------------
# Boundary tracing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryComponent:
    """One closed boundary walk, as a cyclic sequence of half-edge segments.

    Consecutive segments at even positions (0-1, 2-3, ...) lie on the two
    halves of one ribbon side; odd-to-even steps walk past one vertex line
    segment.  An isolated vertex yields a component with no segments.
    """

    segments: tuple[HalfEdgeSegment, ...]
    isolated_vertex: str | None = None

    @property
    def face_degree(self) -> int:
        return len(self.segments) // 2


@dataclass(frozen=True)
class BoundaryDecomposition:
    components: tuple[BoundaryComponent, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    def component_of(self) -> dict[HalfEdgeSegment, int]:
        out: dict[HalfEdgeSegment, int] = {}
        for i, comp in enumerate(self.components):
            for seg in comp.segments:
                out[seg] = i
        return out

    def face_degrees(self) -> list[int]:
        return [c.face_degree for c in self.components]


def _rotation_maps(g: RibbonGraph) -> tuple[dict[EdgeEnd, EdgeEnd], dict[EdgeEnd, EdgeEnd]]:
    nxt: dict[EdgeEnd, EdgeEnd] = {}
    prv: dict[EdgeEnd, EdgeEnd] = {}
    for v in g.vertices:
        rot = v.rotation
        m = len(rot)
        for i, d in enumerate(rot):
            nxt[d] = rot[(i + 1) % m]
            prv[d] = rot[i - 1]
    return nxt, prv


def cross_edge(g: RibbonGraph, seg: HalfEdgeSegment, signs: Mapping[str, int] | None = None) -> HalfEdgeSegment:
    """Continue along the same ribbon side to the other end of the edge."""
    signs = signs if signs is not None else g.signs()
    side = seg.side
    if signs[seg.end.edge] > 0:
        side = _OTHER_SIDE[side]
    return HalfEdgeSegment(seg.end.partner, side)


def trace_boundary(g: RibbonGraph) -> BoundaryDecomposition:
    """Partition all half-edge segments into boundary components.

    The walk alternates crossing a ribbon (same physical side, so the side
    letter swaps iff the edge is untwisted) with rounding one vertex line
    segment (``R`` side continues to the next end's ``L`` side, ``L`` to the
    previous end's ``R``).  Isolated vertices contribute one empty component
    each, appended after the traced ones.
    """
    require_valid(g)
    signs = g.signs()
    nxt, prv = _rotation_maps(g)

    def estep(seg: HalfEdgeSegment) -> HalfEdgeSegment:
        side = seg.side
        if signs[seg.end.edge] > 0:
            side = _OTHER_SIDE[side]
        return HalfEdgeSegment(seg.end.partner, side)

    def vstep(seg: HalfEdgeSegment) -> HalfEdgeSegment:
        if seg.side == R:
            return HalfEdgeSegment(nxt[seg.end], L)
        return HalfEdgeSegment(prv[seg.end], R)

    order: list[HalfEdgeSegment] = []
    for v in g.vertices:
        for d in v.rotation:
            order.append(HalfEdgeSegment(d, L))
            order.append(HalfEdgeSegment(d, R))

    seen: set[HalfEdgeSegment] = set()
    components: list[BoundaryComponent] = []
    for start in order:
        if start in seen:
            continue
        seq: list[HalfEdgeSegment] = []
        cur = start
        while True:
            seq.append(cur)
            seen.add(cur)
            cur = estep(cur)
            seq.append(cur)
            seen.add(cur)
            cur = vstep(cur)
            if cur == start:
                break
        components.append(BoundaryComponent(tuple(seq)))
    for v in g.vertices:
        if not v.rotation:
            components.append(BoundaryComponent((), isolated_vertex=v.name))
    return BoundaryDecomposition(tuple(components))


def edge_side_pairs(g: RibbonGraph, edge: str) -> tuple[tuple[HalfEdgeSegment, HalfEdgeSegment], tuple[HalfEdgeSegment, HalfEdgeSegment]]:
    """The two ribbon sides of an edge, each as its pair of half-edge segments."""
    signs = g.signs()
    a = HalfEdgeSegment(EdgeEnd(edge, 1), L)
    b = HalfEdgeSegment(EdgeEnd(edge, 1), R)
    return (a, cross_edge(g, a, signs)), (b, cross_edge(g, b, signs))


# ---------------------------------------------------------------------------
# Connectivity, Euler characteristic, orientability
# ---------------------------------------------------------------------------

def connected_components(g: RibbonGraph) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Connected pieces of the underlying multigraph as (vertices, edges), in stored vertex order."""
    parent: dict[str, str] = {v.name: v.name for v in g.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    at: dict[str, list[str]] = {}
    for v in g.vertices:
        for d in v.rotation:
            at.setdefault(d.edge, []).append(v.name)
    for e in g.edges:
        u, w = at[e.name]
        parent[find(u)] = find(w)

    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(find(v.name), []).append(v.name)
    out = []
    for root in sorted(groups, key=lambda r: g.vertex_names.index(groups[r][0])):
        vs = tuple(groups[root])
        es = tuple(e.name for e in g.edges if find(at[e.name][0]) == find(root))
        out.append((vs, es))
    return out


def euler_characteristic_by_component(g: RibbonGraph) -> list[int]:
    """V - E + F for each connected piece (an isolated vertex counts 1 - 0 + 1 = 2)."""
    decomp = trace_boundary(g)
    vertex_home: dict[str, int] = {}
    pieces = connected_components(g)
    for i, (vs, _) in enumerate(pieces):
        for name in vs:
            vertex_home[name] = i
    faces = [0] * len(pieces)
    for comp in decomp.components:
        if comp.isolated_vertex is not None:
            faces[vertex_home[comp.isolated_vertex]] += 1
        else:
            faces[vertex_home[g.vertex_of(comp.segments[0].end)]] += 1
    return [len(vs) - len(es) + faces[i] for i, (vs, es) in enumerate(pieces)]


def euler_characteristic(g: RibbonGraph) -> int:
    return sum(euler_characteristic_by_component(g))


def orientation_flips(g: RibbonGraph) -> set[str] | None:
    """A vertex set whose flips make every sign +1, or None if none exists.

    Twisted loops can never be repaired by flips, and a cycle with an odd
    number of twisted edges forces a parity conflict; either situation means
    the underlying surface is non-orientable.
    """
    require_valid(g)
    at: dict[str, list[str]] = {}
    for v in g.vertices:
        for d in v.rotation:
            at.setdefault(d.edge, []).append(v.name)
    adj: dict[str, list[tuple[str, int]]] = {v.name: [] for v in g.vertices}
    for e in g.edges:
        u, w = at[e.name]
        if u == w:
            if e.sign < 0:
                return None
        else:
            adj[u].append((w, e.sign))
            adj[w].append((u, e.sign))
    bit: dict[str, int] = {}
    for v in g.vertices:
        if v.name in bit:
            continue
        bit[v.name] = 0
        stack = [v.name]
        while stack:
            cur = stack.pop()
            for other, sign in adj[cur]:
                want = bit[cur] ^ (1 if sign < 0 else 0)
                if other not in bit:
                    bit[other] = want
                    stack.append(other)
                elif bit[other] != want:
                    return None
    return {name for name, b in bit.items() if b}


def is_orientable(g: RibbonGraph) -> bool:
    return orientation_flips(g) is not None


def flip_vertex(g: RibbonGraph, vertex: str) -> RibbonGraph:
    """Reverse the rotation at one vertex; the result is the same surface.

    Edges with exactly one end at the vertex change sign; loops at it keep
    theirs.  Flipping twice restores the original graph exactly.
    """
    if vertex not in g.vertex_names:
        raise UnknownVertexError(vertex)
    counts: dict[str, int] = {}
    for v in g.vertices:
        if v.name == vertex:
            for d in v.rotation:
                counts[d.edge] = counts.get(d.edge, 0) + 1
    vertices = tuple(
        Vertex(v.name, tuple(reversed(v.rotation))) if v.name == vertex else v
        for v in g.vertices
    )
    edges = tuple(
        Edge(e.name, -e.sign if counts.get(e.name, 0) == 1 else e.sign)
        for e in g.edges
    )
    return RibbonGraph(vertices, edges)


def oriented_form(g: RibbonGraph) -> tuple[RibbonGraph, tuple[str, ...]]:
    """Flip vertices until all signs are +1; fails on non-orientable graphs."""
    flips = orientation_flips(g)
    if flips is None:
        raise NotOrientableError("graph is not orientable")
    out = g
    flipped = tuple(name for name in g.vertex_names if name in flips)
    for name in flipped:
        out = flip_vertex(out, name)
    return out, flipped


# ---------------------------------------------------------------------------
# Arrow presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    """A labelled arrow on a circle; ``forward`` is relative to the circle's sense."""

    label: str
    forward: bool


@dataclass(frozen=True)
class Circle:
    name: str
    arrows: tuple[Arrow, ...] = ()


@dataclass(frozen=True)
class ArrowPresentation:
    circles: tuple[Circle, ...] = ()

    def labels(self) -> list[str]:
        seen: list[str] = []
        for c in self.circles:
            for a in c.arrows:
                if a.label not in seen:
                    seen.append(a.label)
        return seen


def to_arrow_presentation(g: RibbonGraph) -> ArrowPresentation:
    """One circle per vertex, arrows in rotation order.

    An untwisted edge gets two arrows pointing the same way relative to
    their circles, a twisted edge two arrows pointing opposite ways.  The
    remaining freedom (flipping both arrows of an untwisted edge) is spent
    encoding which arrow is end 1, so the round trip through
    :func:`from_arrow_presentation` reproduces the graph exactly.
    """
    require_valid(g)
    scan: dict[EdgeEnd, int] = {}
    pos = 0
    for v in g.vertices:
        for d in v.rotation:
            scan[d] = pos
            pos += 1
    forward: dict[EdgeEnd, bool] = {}
    for e in g.edges:
        d1, d2 = e.ends
        if e.sign < 0:
            forward[d1], forward[d2] = True, False
        elif scan[d1] < scan[d2]:
            forward[d1], forward[d2] = True, True
        else:
            forward[d1], forward[d2] = False, False
    circles = tuple(
        Circle(v.name, tuple(Arrow(d.edge, forward[d]) for d in v.rotation))
        for v in g.vertices
    )
    return ArrowPresentation(circles)


def from_arrow_presentation(p: ArrowPresentation) -> RibbonGraph:
    """Rebuild the rotation system: circle -> vertex, arrow pair -> edge.

    Raises :class:`MalformedPresentationError` unless every label appears on
    exactly two arrows.  Matching arrow directions mean an untwisted edge,
    opposite directions a twisted one; end numbers are recovered from the
    convention used by :func:`to_arrow_presentation`.
    """
    positions: dict[str, list[tuple[int, int, bool]]] = {}
    for ci, c in enumerate(p.circles):
        for ai, a in enumerate(c.arrows):
            positions.setdefault(a.label, []).append((ci, ai, a.forward))
    for label, occ in positions.items():
        if len(occ) != 2:
            raise MalformedPresentationError(
                f"label {label!r} appears on {len(occ)} arrows, expected exactly 2"
            )

    end_at: dict[tuple[int, int], EdgeEnd] = {}
    signs: dict[str, int] = {}
    for label in sorted(positions):
        first, second = positions[label]
        if first[2] != second[2]:
            signs[label] = -1
            one = first if first[2] else second
        else:
            signs[label] = 1
            one = first if first[2] else second
        two = second if one == first else first
        end_at[one[:2]] = EdgeEnd(label, 1)
        end_at[two[:2]] = EdgeEnd(label, 2)

    vertices = tuple(
        Vertex(c.name, tuple(end_at[(ci, ai)] for ai in range(len(c.arrows))))
        for ci, c in enumerate(p.circles)
    )
    order: list[str] = []
    for c in p.circles:
        for a in c.arrows:
            if a.label not in order:
                order.append(a.label)
    edges = tuple(Edge(label, signs[label]) for label in order)
    g = RibbonGraph(vertices, edges)
    require_valid(g)
    return g


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def graph_to_text(g: RibbonGraph) -> str:
    """Serialize in the plain-text format; inverse of :func:`parse_graph`."""
    lines = []
    for v in g.vertices:
        ends = " ".join(str(d) for d in v.rotation)
        lines.append(f"vertex {v.name}:" + (f" {ends}" if ends else ""))
    for e in g.edges:
        lines.append(f"edge {e.name}: {'+' if e.sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> RibbonGraph:
    """Parse the text format::

        # comment
        vertex u: a.1 b.1 a.2 b.2
        edge a: +
        edge b: -

    Rotation order is as written (counterclockwise); errors carry line and
    column positions.
    """
    vertices: list[Vertex] = []
    sign_decls: list[tuple[str, int]] = []
    declared_edges: set[str] = set()
    seen_vertices: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        head, _, rest = stripped.partition(":")
        if not _:
            raise TextFormatError(lineno, indent + 1, "expected ':' after declaration head")
        parts = head.split()
        if len(parts) != 2 or parts[0] not in ("vertex", "edge"):
            raise TextFormatError(lineno, indent + 1, "expected 'vertex <name>:' or 'edge <name>:'")
        kind, name = parts
        if not _is_name(name):
            raise TextFormatError(lineno, line.index(name) + 1, f"bad name {name!r}")
        if kind == "vertex":
            if name in seen_vertices:
                raise TextFormatError(lineno, indent + 1, f"vertex {name!r} declared twice")
            seen_vertices.add(name)
            ends = []
            col = len(line) - len(rest) + 1
            for token in rest.split():
                col = line.index(token, col - 1) + 1
                try:
                    ends.append(_parse_end(token))
                except ValueError as exc:
                    raise TextFormatError(lineno, col, str(exc)) from None
                col += len(token)
            vertices.append(Vertex(name, tuple(ends)))
        else:
            if name in declared_edges:
                raise TextFormatError(lineno, indent + 1, f"edge {name!r} declared twice")
            declared_edges.add(name)
            sig = rest.strip()
            if sig not in ("+", "-"):
                raise TextFormatError(lineno, len(line) - len(rest) + 1, f"edge sign must be '+' or '-', got {sig!r}")
            sign_decls.append((name, 1 if sig == "+" else -1))

    mentioned: list[str] = []
    for v in vertices:
        for d in v.rotation:
            if d.edge not in mentioned:
                mentioned.append(d.edge)
    signs = dict(sign_decls)
    order = [name for name, _ in sign_decls]
    missing = [name for name in mentioned if name not in signs]
    if missing:
        raise TextFormatError(1, 1, f"edges used but never declared: {', '.join(sorted(missing))}")
    g = RibbonGraph(tuple(vertices), tuple(Edge(n, signs[n]) for n in order))
    violations = validate(g)
    if violations:
        raise TextFormatError(1, 1, "; ".join(v.message for v in violations))
    return g


def _is_name(token: str) -> bool:
    return bool(token) and all(ch.isalnum() or ch == "_" for ch in token)


def load_graph(path) -> RibbonGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(path, g: RibbonGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_text(g))
