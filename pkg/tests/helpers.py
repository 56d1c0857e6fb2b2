"""Shared graph builders and paths for the test suite."""

from pathlib import Path

from ribbonlab import parse_graph

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"

TEXTS = {
    "loop": "vertex u: a.1 a.2\nedge a: +\n",
    "twisted_loop": "vertex u: a.1 a.2\nedge a: -\n",
    "path2": "vertex u: a.1\nvertex v: a.2\nedge a: +\n",
    "torus": "vertex u: a.1 b.1 a.2 b.2\nedge a: +\nedge b: +\n",
    "bouquet": "vertex u: a.1 a.2 b.1 b.2\nedge a: +\nedge b: +\n",
    "digon": "vertex u: a.1 b.1\nvertex v: a.2 b.2\nedge a: +\nedge b: +\n",
    "triangle": (
        "vertex u: a.1 c.2\nvertex v: b.1 a.2\nvertex w: c.1 b.2\n"
        "edge a: +\nedge b: +\nedge c: +\n"
    ),
    "isolated": "vertex u:\n",
}


def graph(name: str):
    return parse_graph(TEXTS[name])
