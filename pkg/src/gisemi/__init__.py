"""Graph inverse semigroups, polycyclic monoids, and the embedding of one into the other."""

from ._zero import ZERO, Zero
from .graph import Graph, Path, builtin, enumerate_paths, g1, ladder, load_graph, rose, validate_graph
from .gis import (Edge, EdgeInverse, GisElement, Vertex, enumerate_elements, gis_invert,
                  gis_multiply, invert, multiply, reduce_word)
from .polycyclic import ONE, Letter, PolyElement, poly_multiply, poly_reduce
from .embedding import EmbeddingSpec, default_spec, embed_element, verify_embedding

__all__ = [
    "ZERO", "Zero", "Graph", "Path", "builtin", "enumerate_paths", "g1", "ladder", "load_graph",
    "rose", "validate_graph", "Edge", "EdgeInverse", "GisElement", "Vertex", "enumerate_elements",
    "gis_invert", "gis_multiply", "invert", "multiply", "reduce_word", "ONE", "Letter",
    "PolyElement", "poly_multiply", "poly_reduce", "EmbeddingSpec", "default_spec",
    "embed_element", "verify_embedding",
]
