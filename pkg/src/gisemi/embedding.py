"""The embedding F: G(E) -> P_lambda and its exhaustive verification.

With injections ``g`` (vertices) and ``h`` (edges) into the generators,

    F(a)    = g(a) g(a)^-1
    F(e)    = g(s(e)) h(e) g(r(e))^-1
    F(uv^-1) = g(s(u)) h(u_1)...h(u_n) (g(s(v)) h(v_1)...h(v_m))^-1

The closed form is what ``embed_element`` computes; ``embed_element_oracle``
multiplies generator images instead, and the two are checked against each
other.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from ._zero import ZERO
from .gis import (Edge, EdgeInverse, Element, GisElement, Generator, Vertex,
                  enumerate_elements, invert, multiply)
from .graph import Graph, Path, strip_prefix
from .polycyclic import (PolyElement, PolyValue, embed_omega_into_p2, poly_multiply,
                         poly_product)


@dataclass(frozen=True)
class EmbeddingSpec:
    graph: Graph
    g: Mapping[str, int]
    h: Mapping[str, int]
    arity: int

    def __post_init__(self):
        if set(self.g) != set(self.graph.vertices):
            raise ValueError("g must be defined on exactly the vertices")
        if set(self.h) != {e.id for e in self.graph.edges}:
            raise ValueError("h must be defined on exactly the edges")
        for name, m in (("g", self.g), ("h", self.h)):
            if len(set(m.values())) != len(m):
                raise ValueError(f"{name} is not injective")
            bad = [i for i in m.values() if not 0 <= i < self.arity]
            if bad:
                raise ValueError(f"{name} uses index {bad[0]} outside arity {self.arity}")


def default_spec(graph: Graph) -> EmbeddingSpec:
    """Vertices get 0..|E0|-1 and edges |E0|.. in identifier order."""
    nv = len(graph.vertices)
    g = {v: i for i, v in enumerate(graph.vertices)}
    h = {e.id: nv + j for j, e in enumerate(graph.edges)}
    return EmbeddingSpec(graph, g, h, nv + len(graph.edges))


def embed_generator(spec: EmbeddingSpec, gen: Generator) -> PolyElement:
    graph, g, h = spec.graph, spec.g, spec.h
    if isinstance(gen, Vertex):
        return PolyElement((g[gen.v],), (g[gen.v],))
    img = PolyElement((g[graph.src(gen.e)], h[gen.e]), (g[graph.dst(gen.e)],))
    return img if isinstance(gen, Edge) else img.inverse()


def _path_word(spec: EmbeddingSpec, p: Path) -> tuple[int, ...]:
    return (spec.g[p.start],) + tuple(spec.h[e] for e in p.edges)


def embed_element(spec: EmbeddingSpec, x: Element) -> PolyValue:
    if x is ZERO:
        return ZERO
    return PolyElement(_path_word(spec, x.u), _path_word(spec, x.v))


def embed_element_oracle(spec: EmbeddingSpec, x: Element) -> PolyValue:
    """F(e_1)...F(e_n) F(f_m^-1)...F(f_1^-1), multiplied out in P_lambda."""
    if x is ZERO:
        return ZERO
    if x.u.is_vertex and x.v.is_vertex:
        return embed_generator(spec, Vertex(x.u.start))
    factors = [embed_generator(spec, Edge(e)) for e in x.u.edges]
    factors += [embed_generator(spec, EdgeInverse(f)) for f in reversed(x.v.edges)]
    return poly_product(spec.arity, factors)


def decode_image(spec: EmbeddingSpec, z: PolyValue) -> Element | None:
    """Recover ``x`` from ``F(x)``; None when ``z`` is not in the image."""
    if z is ZERO:
        return ZERO
    inv_g = {i: v for v, i in spec.g.items()}
    inv_h = {i: e for e, i in spec.h.items()}
    paths = []
    for w in (z.x, z.y):
        if not w or w[0] not in inv_g or any(i not in inv_h for i in w[1:]):
            return None
        try:
            paths.append(spec.graph.path(inv_g[w[0]], *(inv_h[i] for i in w[1:])))
        except ValueError:
            return None
    if paths[0].end != paths[1].end:
        return None
    return GisElement(*paths)


def embed_countable_into_p2(spec: EmbeddingSpec, x: Element) -> PolyValue:
    return embed_omega_into_p2(embed_element(spec, x))


def product_case(x: GisElement, y: GisElement) -> int:
    """Which of the four product shapes ``(a b^-1)(c d^-1)`` falls into.

    1: c = b u with |u| > 0;  2: b = c v with |v| > 0;  3: b = c;  4: zero.
    """
    u = strip_prefix(x.v, y.u)
    if u is not None:
        return 3 if u.is_vertex else 1
    if strip_prefix(y.u, x.v) is not None:
        return 2
    return 4


@dataclass
class EmbeddingReport:
    graph: str
    arity: int
    bound: int
    elements: int = 0
    pairs_checked: int = 0
    case_histogram: dict[int, int] = field(default_factory=lambda: {1: 0, 2: 0, 3: 0, 4: 0})
    status: str = "pass"
    counterexample: dict | None = None
    seconds: float = 0.0
    note: str = ("finite arity |E0|+|E1| is used; P_m sits inside P_lambda for "
                 "m <= lambda by index inclusion")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def fail(self, check: str, **witness):
        if self.status == "pass":
            self.status = "fail"
            self.counterexample = {"check": check, **{k: repr(v) for k, v in witness.items()}}

    def to_dict(self) -> dict:
        d = {
            "graph": self.graph,
            "arity": self.arity,
            "bound": self.bound,
            "elements": self.elements,
            "pairs_checked": self.pairs_checked,
            "case_histogram": {str(k): v for k, v in self.case_histogram.items()},
            "status": self.status,
            "seconds": round(self.seconds, 3),
            "note": self.note,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def verify_embedding(spec: EmbeddingSpec, max_len: int, embed=embed_element) -> EmbeddingReport:
    """Check F on every element (and every pair) with path lengths ``<= max_len``.

    ``embed`` is swappable so a broken map can be fed through the same sweep.
    """
    t0 = time.perf_counter()
    rep = EmbeddingReport(str(spec.graph), spec.arity, max_len)
    elements = enumerate_elements(spec.graph, max_len)
    rep.elements = len(elements)
    images = {x: embed(spec, x) for x in elements}

    seen: dict[PolyValue, Element] = {}
    for x, fx in images.items():
        if x is not ZERO and fx is ZERO:
            rep.fail("nonzero", x=x)
        if fx in seen:
            rep.fail("injective", x=x, y=seen[fx], image=fx)
        seen[fx] = x
        if x is not ZERO and (len(fx.x), len(fx.y)) != (len(x.u) + 1, len(x.v) + 1):
            rep.fail("word-length", x=x, image=fx)
        oracle = embed_element_oracle(spec, x)
        if oracle != fx:
            rep.fail("closed-form", x=x, closed=fx, oracle=oracle)
        if embed(spec, invert(x)) != (fx if fx is ZERO else fx.inverse()):
            rep.fail("inverse", x=x)

    hist = Counter()
    for x in elements:
        fx = images[x]
        for y in elements:
            xy = multiply(x, y)
            lhs = embed(spec, xy)
            rhs = poly_multiply(spec.arity, fx, images[y])
            if lhs != rhs:
                rep.fail("multiplicative", x=x, y=y, f_xy=lhs, fx_fy=rhs)
            if x is not ZERO and y is not ZERO:
                hist[product_case(x, y)] += 1
            rep.pairs_checked += 1
    rep.case_histogram = {k: hist.get(k, 0) for k in (1, 2, 3, 4)}
    rep.seconds = time.perf_counter() - t0
    return rep
