"""Graph inverse semigroups G(E) in normal form.

A nonzero element is a pair ``(u, v)`` of paths with a common range and
stands for ``u v^-1``. The product follows the prefix rule::

    (a b^-1)(c d^-1) = a c1 d^-1     if c = b c1
                     = a (d b1)^-1   if b = c b1
                     = 0             otherwise
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from ._zero import ZERO, Zero
from .graph import Graph, GraphError, Path, enumerate_paths


@dataclass(frozen=True)
class GisElement:
    u: Path
    v: Path

    def __post_init__(self):
        if self.u.end != self.v.end:
            raise ValueError(f"r({self.u}) != r({self.v})")
        object.__setattr__(self, "_hash", hash((self.u._hash, self.v._hash)))

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        return multiply(self, other)

    def inverse(self) -> GisElement:
        return GisElement(self.v, self.u)

    def __repr__(self):
        return f"GisElement({self.u!r}, {self.v!r})"


Element = Union[GisElement, Zero]


@dataclass(frozen=True)
class Vertex:
    v: str


@dataclass(frozen=True)
class Edge:
    e: str


@dataclass(frozen=True)
class EdgeInverse:
    e: str


Generator = Union[Vertex, Edge, EdgeInverse]


def multiply(x: Element, y: Element) -> Element:
    if x is ZERO or y is ZERO:
        return ZERO
    b, c = x.v, y.u
    if b.start != c.start:
        return ZERO
    be, ce = b.edges, c.edges
    nb, nc = len(be), len(ce)
    if nb <= nc:
        if ce[:nb] != be:
            return ZERO
        # c = b c1; b = c is the case of an empty c1
        a = x.u
        return GisElement(Path(a.start, a.edges + ce[nb:], c.end), y.v)
    if be[:nc] != ce:
        return ZERO
    # b = c b1
    d = y.v
    return GisElement(x.u, Path(d.start, d.edges + be[nc:], b.end))


def invert(x: Element) -> Element:
    return x.inverse()


def check_element(g: Graph, x: Element) -> None:
    if x is ZERO:
        return
    for p in (x.u, x.v):
        if not g.is_valid_path(p):
            raise GraphError(f"{p} is not a path of {g.name or 'the graph'}", p.start)


def gis_multiply(g: Graph, lhs: Element, rhs: Element) -> Element:
    """``multiply`` with both factors validated against ``g``."""
    check_element(g, lhs)
    check_element(g, rhs)
    return multiply(lhs, rhs)


def gis_invert(x: Element) -> Element:
    return x.inverse()


def generator_to_element(g: Graph, gen: Generator) -> GisElement:
    if isinstance(gen, Vertex):
        p = g.vertex(gen.v)
        return GisElement(p, p)
    if not g.has_edge(gen.e):
        raise GraphError(f"unknown edge {gen.e}", gen.e)
    path = g.edge_path(gen.e)
    tip = Path(path.end)
    if isinstance(gen, Edge):
        return GisElement(path, tip)
    return GisElement(tip, path)


def reduce_word(g: Graph, word: Sequence[Generator | Zero]) -> Element:
    """Evaluate a nonempty generator word; ``ZERO`` may appear as a letter."""
    if not word:
        raise ValueError("cannot reduce an empty word")
    acc = None
    for letter in word:
        x = ZERO if letter is ZERO else generator_to_element(g, letter)
        acc = x if acc is None else multiply(acc, x)
    return acc


def product(xs: Iterable[Element]) -> Element:
    it = iter(xs)
    acc = next(it)
    for x in it:
        acc = multiply(acc, x)
    return acc


def is_idempotent(x: Element) -> bool:
    return x is ZERO or x.u == x.v


def phi(x: Element) -> Element:
    """``x x^-1``."""
    return x if x is ZERO else GisElement(x.u, x.u)


def psi(x: Element) -> Element:
    """``x^-1 x``."""
    return x if x is ZERO else GisElement(x.v, x.v)


def h_pair(x: Element) -> tuple[Element, Element]:
    return phi(x), psi(x)


def idempotent(p: Path) -> GisElement:
    return GisElement(p, p)


def elements_from_paths(paths: Sequence[Path]) -> list[Element]:
    by_range: dict[str, list[Path]] = {}
    for p in paths:
        by_range.setdefault(p.end, []).append(p)
    out: list[Element] = [ZERO]
    for u in paths:
        out.extend(GisElement(u, v) for v in by_range[u.end])
    return out


def enumerate_elements(g: Graph, max_len: int) -> list[Element]:
    """``0`` followed by every ``u v^-1`` with ``|u|, |v| <= max_len``."""
    return elements_from_paths(enumerate_paths(g, max_len))
