"""Text forms shared by the CLI.

GIS expressions are whitespace-separated tokens: a vertex id, an edge id, an
edge id followed by ``^-1``, or the literal ``0``. Polycyclic elements print
as ``[i j ...][k l ...]^-1`` (or ``0``); letter words as ``p0 p1^-1 ...``.
"""

from __future__ import annotations

import re

from ._zero import ZERO
from .gis import Edge, EdgeInverse, Element, Generator, Vertex, reduce_word
from .graph import Graph
from .polycyclic import Letter, PolyElement, PolyValue

INV = "^-1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1, token: str | None = None):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.token = token


def _tokens(text: str):
    for m in re.finditer(r"\S+", text):
        before = text[: m.start()]
        line = before.count("\n") + 1
        col = m.start() - (before.rfind("\n") + 1) + 1
        yield m.group(), line, col


def parse_expression(g: Graph, text: str) -> list[Generator]:
    """Tokens to generators; ``0`` becomes ``ZERO`` in the list."""
    out = []
    for tok, line, col in _tokens(text):
        if tok == "0":
            out.append(ZERO)
            continue
        name, inverse = tok, False
        if "^" in tok:
            name, _, suffix = tok.partition("^")
            if "^" + suffix != INV or not name:
                raise ParseError(f"malformed inverse suffix in {tok!r}", line, col, tok)
            inverse = True
        is_v, is_e = name in g.vertex_set, g.has_edge(name)
        if is_v and is_e:
            raise ParseError(f"ambiguous identifier {name} (vertex and edge)", line, col, name)
        if is_e:
            out.append(EdgeInverse(name) if inverse else Edge(name))
        elif is_v:
            if inverse:
                raise ParseError(f"inverse suffix on vertex {name}", line, col, name)
            out.append(Vertex(name))
        else:
            raise ParseError(f"unknown identifier {name}", line, col, name)
    if not out:
        raise ParseError("empty expression")
    return out


def parse_element(g: Graph, text: str) -> Element:
    return reduce_word(g, parse_expression(g, text))


def format_element(x: Element) -> str:
    """``u v^-1`` spelled as generators; vertices only when both paths are trivial."""
    if x is ZERO:
        return "0"
    if x.u.is_vertex and x.v.is_vertex:
        return x.u.start
    toks = list(x.u.edges) + [f + INV for f in reversed(x.v.edges)]
    return " ".join(toks)


_POLY = re.compile(r"\[((?:\d+(?: \d+)*)?)\]\[((?:\d+(?: \d+)*)?)\]\^-1")


def parse_poly(text: str) -> PolyValue:
    if text == "0":
        return ZERO
    m = _POLY.fullmatch(text)
    if not m:
        raise ParseError(f"not a polycyclic element: {text!r}")
    x, y = (tuple(int(t) for t in grp.split()) for grp in m.groups())
    # bit-exact: reject leading zeros such as "[01]"
    if format_poly(PolyElement(x, y)) != text:
        raise ParseError(f"non-canonical polycyclic element: {text!r}")
    return PolyElement(x, y)


def format_poly(z: PolyValue) -> str:
    if z is ZERO:
        return "0"
    return "[" + " ".join(map(str, z.x)) + "][" + " ".join(map(str, z.y)) + "]^-1"


_LETTER = re.compile(r"p(\d+)(\^-1)?")


def parse_letters(text: str) -> list[Letter]:
    out = []
    for tok, line, col in _tokens(text):
        m = _LETTER.fullmatch(tok)
        if not m:
            raise ParseError(f"bad letter {tok!r} (expected p<i> or p<i>^-1)", line, col, tok)
        out.append(Letter(int(m.group(1)), m.group(2) is None))
    return out


def format_letters(word) -> str:
    return " ".join(map(repr, word))
