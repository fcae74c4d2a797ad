"""Finite directed multigraphs, their paths and the prefix order on paths."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Malformed graph description. ``identifier`` names the offending id."""

    def __init__(self, message: str, identifier: str | None = None):
        super().__init__(message)
        self.identifier = identifier


@dataclass(frozen=True)
class Path:
    """A start vertex, a composable edge sequence and the vertex it ends at.

    A vertex is the path with no edges. ``end`` is carried explicitly so
    that ``path_range`` needs no graph; build paths through ``Graph.path``
    to get it checked.
    """

    start: str
    edges: tuple[str, ...] = ()
    end: str = ""

    def __post_init__(self):
        if not self.end:
            if self.edges:
                raise ValueError("a path with edges needs an explicit end vertex")
            object.__setattr__(self, "end", self.start)
        # sweeps hash paths millions of times
        object.__setattr__(self, "_hash", hash((self.start, self.edges)))

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def sort_key(self):
        return (len(self.edges), self.edges, self.start)

    def __repr__(self):
        return f"<{self.start};{list(self.edges)}>"


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    name: str = ""

    @cached_property
    def _edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def has_edge(self, e: str) -> bool:
        return e in self._edge_map

    def src(self, e: str) -> str:
        return self._edge_map[e].src

    def dst(self, e: str) -> str:
        return self._edge_map[e].dst

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out[v]

    def vertex(self, v: str) -> Path:
        if v not in self.vertex_set:
            raise GraphError(f"unknown vertex {v}", v)
        return Path(v)

    def path(self, start: str, *edges: str) -> Path:
        """Build and check the path ``start; edges``."""
        cur = self.vertex(start).start
        for e in edges:
            if e not in self._edge_map:
                raise GraphError(f"unknown edge {e}", e)
            if self.src(e) != cur:
                raise GraphError(f"edge {e} does not start at {cur}", e)
            cur = self.dst(e)
        return Path(start, tuple(edges), cur)

    def edge_path(self, e: str) -> Path:
        return Path(self.src(e), (e,), self.dst(e))

    def is_valid_path(self, p: Path) -> bool:
        try:
            return self.path(p.start, *p.edges) == p
        except GraphError:
            return False

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges],
        }

    def __str__(self):
        return self.name or f"graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def validate_graph(raw: Mapping, name: str = "") -> Graph:
    """Check a ``{"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}`` record.

    Vertices and edges come back sorted by identifier.
    """
    try:
        raw_vertices = list(raw["vertices"])
        raw_edges = list(raw.get("edges", []))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph description needs a 'vertices' list ({exc})") from None

    seen: set[str] = set()
    for v in raw_vertices:
        if not isinstance(v, str):
            raise GraphError(f"vertex identifier {v!r} is not a string", str(v))
        if v in seen:
            raise GraphError(f"duplicate identifier {v}", v)
        seen.add(v)

    edges = []
    seen_edges: set[str] = set()
    for rec in raw_edges:
        try:
            eid, src, dst = rec["id"], rec["src"], rec["dst"]
        except (KeyError, TypeError):
            raise GraphError(f"edge record {rec!r} needs id, src and dst") from None
        if eid in seen_edges:
            raise GraphError(f"duplicate identifier {eid}", eid)
        seen_edges.add(eid)
        for end in (src, dst):
            if end not in seen:
                raise GraphError(f"dangling endpoint {end}", end)
        edges.append(Edge(eid, src, dst))

    return Graph(tuple(sorted(seen)), tuple(sorted(edges, key=lambda e: e.id)), name)


def load_graph(path) -> Graph:
    with open(path) as fh:
        raw = json.load(fh)
    return validate_graph(raw, name=str(path))


# Built-in graphs

def g1() -> Graph:
    """Two vertices joined by two parallel edges e, f: v1 -> v2."""
    return validate_graph(
        {"vertices": ["v1", "v2"],
         "edges": [{"id": "e", "src": "v1", "dst": "v2"},
                   {"id": "f", "src": "v1", "dst": "v2"}]},
        name="g1",
    )


def rose(k: int) -> Graph:
    """One vertex ``o`` with loops ``p0 .. p{k-1}``."""
    width = len(str(max(k - 1, 0)))
    loops = [{"id": f"p{i:0{width}d}", "src": "o", "dst": "o"} for i in range(k)]
    return validate_graph({"vertices": ["o"], "edges": loops}, name=f"rose:{k}")


def ladder(n: int) -> Graph:
    """Vertices 1..2n with one edge ``(2i-1)-(2i)`` per rung."""
    verts = [str(i) for i in range(1, 2 * n + 1)]
    edges = [{"id": f"{2 * i - 1}-{2 * i}", "src": str(2 * i - 1), "dst": str(2 * i)}
             for i in range(1, n + 1)]
    return validate_graph({"vertices": verts, "edges": edges}, name=f"ladder:{n}")


def builtin(spec: str) -> Graph:
    """Resolve ``g1``, ``rose:K`` or ``ladder:N``."""
    kind, _, arg = spec.partition(":")
    if kind == "g1" and not arg:
        return g1()
    if kind in ("rose", "ladder") and arg.isdigit():
        k = int(arg)
        if kind == "rose":
            return rose(k)
        if k >= 1:
            return ladder(k)
    raise GraphError(f"unknown builtin graph {spec!r}", spec)


# Path operations

def path_source(p: Path) -> str:
    return p.start


def path_range(p: Path) -> str:
    return p.end


def concat(p: Path, q: Path) -> Path | None:
    """``pq``, or None when ``r(p) != s(q)``."""
    if p.end != q.start:
        return None
    return Path(p.start, p.edges + q.edges, q.end)


def strip_prefix(p: Path, q: Path) -> Path | None:
    """The ``k`` with ``q = pk``, or None if ``p`` is not a prefix of ``q``."""
    if p.start != q.start:
        return None
    n = len(p.edges)
    if q.edges[:n] != p.edges:
        return None
    return Path(p.end, q.edges[n:], q.end)


def is_prefix(p: Path, q: Path) -> bool:
    return p.start == q.start and q.edges[: len(p.edges)] == p.edges


def path_leq(a: Path, b: Path) -> bool:
    """``a <= b`` iff ``b`` is a prefix of ``a``."""
    return is_prefix(b, a)


def graph_prefixes(g: Graph, p: Path) -> list[Path]:
    """All prefixes of ``p``, shortest first."""
    out = [Path(p.start)]
    cur = p.start
    for i, e in enumerate(p.edges, 1):
        cur = g.dst(e)
        out.append(Path(p.start, p.edges[:i], cur))
    return out


def extensions(g: Graph, p: Path) -> list[Path]:
    """One-edge extensions ``pe``."""
    return [Path(p.start, p.edges + (e.id,), e.dst) for e in g.out_edges(p.end)]


def iter_paths(g: Graph, max_len: int) -> Iterator[list[Path]]:
    layer = sorted((Path(v) for v in g.vertices), key=Path.sort_key)
    for _ in range(max_len + 1):
        if not layer:
            return
        yield layer
        layer = sorted((q for p in layer for q in extensions(g, p)), key=Path.sort_key)


def enumerate_paths(g: Graph, max_len: int) -> list[Path]:
    """Every path of length ``<= max_len``, by length and then identifiers."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    return [p for layer in iter_paths(g, max_len) for p in layer]


def descendants(g: Graph, p: Path, max_len: int) -> list[Path]:
    """``p`` and all its extensions of total length ``<= max_len``."""
    out, stack = [], [p]
    while stack:
        q = stack.pop()
        if len(q) > max_len:
            continue
        out.append(q)
        stack.extend(extensions(g, q))
    return out


def comparable_paths(g: Graph, p: Path, max_len: int) -> list[Path]:
    """Paths of length ``<= max_len`` that are prefixes or extensions of ``p``."""
    pre = [q for q in graph_prefixes(g, p) if len(q) <= max_len]
    return pre[:-1] + descendants(g, p, max_len) if len(p) <= max_len else pre


def parse_path(g: Graph, items: Iterable[str]) -> Path:
    """A vertex id alone, or a non-empty list of edge ids."""
    items = list(items)
    if len(items) == 1 and items[0] in g.vertex_set:
        return Path(items[0])
    if not items:
        raise GraphError("empty path")
    return g.path(g.src(items[0]) if g.has_edge(items[0]) else items[0], *items)
