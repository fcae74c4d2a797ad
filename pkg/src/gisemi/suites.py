"""Exhaustive and sampled verification suites.

Each suite returns a ``SuiteResult``; ``run_all`` strings them together for
``gis verify all``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ._zero import ZERO
from .embedding import default_spec, embed_countable_into_p2, embed_element, verify_embedding
from .gis import (Element, GisElement, enumerate_elements, h_pair,
                  invert, is_idempotent, multiply)
from .graph import Graph, Path, comparable_paths, enumerate_paths, rose
from .polycyclic import (Letter, PolyElement, all_letter_words, code_letters, enumerate_poly,
                         poly_multiply, poly_reduce)
from . import topology as topo


@dataclass
class SuiteConfig:
    max_len: int = 3          # path-length bound for algebraic sweeps
    trunc: int = 5            # topology window
    topo_bound: int = 2       # elements whose translations are checked
    max_excluded: int = 3     # size of excluded sets for cofinite filters
    p2_bound: int = 2
    seed: int = 0
    samples: int = 10_000
    sample_len: int = 12
    hom_len: int = 6
    code_max: int = 8


@dataclass
class SuiteResult:
    name: str
    status: str = "pass"
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.status == "pass"

    def fail(self, check: str, witness):
        self.status = "fail"
        if len(self.failures) < 20:
            self.failures.append({"check": check, "witness": repr(witness)})

    def to_dict(self):
        d = {"name": self.name, "status": self.status,
             "seconds": round(self.seconds, 3), "details": self.details}
        if self.failures:
            d["failures"] = self.failures
        return d


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# Inverse-semigroup axioms

def associativity_failures(elements: list, mul=multiply, limit: int = 5) -> list[tuple]:
    """All-triples associativity via interned product tables.

    Products of bounded elements leave the bounded set, so results are
    interned into an extended index and the two bracketings are compared as
    integer tables.
    """
    index = {x: i for i, x in enumerate(elements)}
    ext = list(elements)

    def intern(z):
        i = index.get(z)
        if i is None:
            i = index[z] = len(ext)
            ext.append(z)
        return i

    n = len(elements)
    xy = np.array([[intern(mul(x, y)) for y in elements] for x in elements], dtype=np.int64)
    prods = np.unique(xy)
    pos = np.full(len(ext), -1, dtype=np.int64)
    pos[prods] = np.arange(len(prods))
    left = np.array([[intern(mul(ext[p], z)) for z in elements] for p in prods], dtype=np.int64)
    right = np.array([[intern(mul(x, ext[q])) for q in prods] for x in elements], dtype=np.int64)
    a = pos[xy]
    cols = np.arange(n)
    out = []
    for i in range(n):
        lhs = left[a[i]]                  # (x_i y) z    indexed [y, z]
        rhs = right[i][a]                 # x_i (y z)    indexed [y, z]
        for j, k in np.argwhere(lhs != rhs)[: limit - len(out)]:
            out.append((elements[i], elements[j], elements[cols[k]]))
        if len(out) >= limit:
            break
    return out


def inverse_candidates(g: Graph, x: Element, max_len: int) -> list[Element]:
    """Every ``y`` at ``max_len`` that could satisfy ``xyx = x`` and ``yxy = y``.

    For ``x = u v^-1`` and ``y = c d^-1``: if ``c`` and ``v`` are prefix-
    incomparable then ``xy = 0``, and if ``d`` and ``u`` are then ``yx = 0``;
    both force a failure, so only comparable pairs are returned.
    """
    if x is ZERO:
        return enumerate_elements(g, max_len)
    cs = comparable_paths(g, x.v, max_len)
    ds = comparable_paths(g, x.u, max_len)
    out: list[Element] = [ZERO]
    out.extend(GisElement(c, d) for c in cs for d in ds if c.end == d.end)
    return out


@_timed
def axioms_suite(g: Graph, max_len: int) -> SuiteResult:
    res = SuiteResult("axioms")
    elements = enumerate_elements(g, max_len)
    res.details.update(graph=str(g), bound=max_len, elements=len(elements))

    for t in associativity_failures(elements):
        res.fail("associativity", t)
    res.details["triples"] = len(elements) ** 3

    for x in elements:
        xi = invert(x)
        if multiply(multiply(x, xi), x) != x:
            res.fail("x x^-1 x = x", x)
        if multiply(multiply(xi, x), xi) != xi:
            res.fail("x^-1 x x^-1 = x^-1", x)
        if invert(xi) != x:
            res.fail("involution", x)

    checked = 0
    for x in elements:
        sols = []
        for y in inverse_candidates(g, x, 2 * max_len):
            checked += 1
            if multiply(multiply(x, y), x) == x and multiply(multiply(y, x), y) == y:
                sols.append(y)
        if sols != [invert(x)]:
            res.fail("unique inverse", {"x": x, "solutions": sols})
    res.details["inverse_candidates"] = checked

    for x in elements:
        for y in elements:
            if invert(multiply(x, y)) != multiply(invert(y), invert(x)):
                res.fail("(xy)^-1 = y^-1 x^-1", (x, y))

    idem = [x for x in elements if is_idempotent(x)]
    for e in idem:
        if multiply(e, e) != e:
            res.fail("idempotent", e)
        for f in idem:
            if multiply(e, f) != multiply(f, e):
                res.fail("idempotents commute", (e, f))
    res.details["idempotents"] = len(idem)

    seen = {}
    for x in elements:
        k = h_pair(x)
        if k in seen:
            res.fail("h_pair injective", (x, seen[k]))
        seen[k] = x
    return res


# Embedding into P_lambda

@_timed
def embedding_suite(g: Graph, max_len: int) -> SuiteResult:
    rep = verify_embedding(default_spec(g), max_len)
    res = SuiteResult("embedding", rep.status, rep.to_dict())
    if rep.counterexample:
        res.failures.append(rep.counterexample)
    res.details["all_cases_hit"] = all(rep.case_histogram.values())
    return res


# P_omega -> P_2 and the composite countable embedding

def code_relation_failures(code_max: int) -> list:
    out = []
    for i in range(code_max + 1):
        for j in range(code_max + 1):
            word = code_letters(i, positive=False) + code_letters(j)
            got = poly_reduce(2, word)
            want = PolyElement() if i == j else ZERO
            if got != want:
                out.append((i, j, got))
    return out


@_timed
def p2_suite(g: Graph, max_len: int, code_max: int = 8) -> SuiteResult:
    res = SuiteResult("p2")
    spec = default_spec(g)
    elements = enumerate_elements(g, max_len)
    res.details.update(graph=str(g), bound=max_len, elements=len(elements), code_max=code_max)
    images = {x: embed_countable_into_p2(spec, x) for x in elements}
    if len(set(images.values())) != len(elements):
        res.fail("injective", "two elements share an image")
    for x in elements:
        for y in elements:
            lhs = embed_countable_into_p2(spec, multiply(x, y))
            rhs = poly_multiply(2, images[x], images[y])
            if lhs != rhs:
                res.fail("multiplicative", (x, y, lhs, rhs))
    for bad in code_relation_failures(code_max):
        res.fail("q_i^-1 q_j", bad)
    return res


# Rewriting

def bicyclic_oracle(word) -> tuple[int, int]:
    """Fold letters of P_1 in the bicyclic monoid: ``(m, n)`` is ``p^m (p^-1)^n``."""
    a, b = 0, 0
    for letter in word:
        c, d = (1, 0) if letter.positive else (0, 1)
        t = max(b, c)
        a, b = a - b + t, d - c + t
    return a, b


def random_word(rng: random.Random, arity: int, max_len: int) -> list[Letter]:
    n = rng.randint(0, max_len)
    return [Letter(rng.randrange(arity), rng.random() < 0.5) for _ in range(n)]


@_timed
def confluence_suite(seed: int = 0, samples: int = 10_000, max_len: int = 12,
                     hom_len: int = 6) -> SuiteResult:
    res = SuiteResult("confluence")
    rng = random.Random(seed)
    for _ in range(samples):
        w = random_word(rng, 2, max_len)
        left = poly_reduce(2, w, "leftmost")
        right = poly_reduce(2, w, "rightmost")
        if left != right:
            res.fail("strategy independence", (w, left, right))

    splits = 0
    for w in all_letter_words(2, hom_len):
        for k in range(len(w) + 1):
            splits += 1
            whole = poly_reduce(2, w)
            parts = poly_multiply(2, poly_reduce(2, w[:k]), poly_reduce(2, w[k:]))
            if whole != parts:
                res.fail("homomorphism", (w, k, whole, parts))

    p1_words = 0
    for w in all_letter_words(1, hom_len):
        p1_words += 1
        z = poly_reduce(1, w)
        if z is ZERO or (len(z.x), len(z.y)) != bicyclic_oracle(w):
            res.fail("P1 bicyclic", (w, z))
    res.details.update(seed=seed, samples=samples, sample_len=max_len,
                       homomorphism_splits=splits, p1_words=p1_words)
    return res


def poly_to_rose(z, g: Graph) -> Element:
    if z is ZERO:
        return ZERO
    edges = [e.id for e in g.edges]
    return GisElement(Path("o", tuple(edges[i] for i in z.x), "o"),
                      Path("o", tuple(edges[i] for i in z.y), "o"))


@_timed
def rose_isomorphism_suite(arities=(1, 2, 3), max_total: int = 4) -> SuiteResult:
    """P_k against G(rose:k) on every pair with ``|x| + |y| <= max_total``."""
    res = SuiteResult("rose-isomorphism")
    pairs = 0
    for k in arities:
        g = rose(k)
        elems = enumerate_poly(k, max_total)
        as_gis = {z: poly_to_rose(z, g) for z in elems}
        if len(set(as_gis.values())) != len(elems):
            res.fail("identification injective", k)
        for a in elems:
            for b in elems:
                pairs += 1
                if poly_to_rose(poly_multiply(k, a, b), g) != multiply(as_gis[a], as_gis[b]):
                    res.fail("product", (k, a, b))
    res.details.update(arities=list(arities), max_total=max_total, pairs=pairs)
    return res


# Topology

def cofinite_filters(g: Graph, bound: int, max_excluded: int):
    return [topo.CofiniteFilter(c) for c in topo.excluded_sets(enumerate_paths(g, bound), max_excluded)]


def _merge(res: SuiteResult, rep: topo.TopologyReport):
    for c in rep.checks:
        if not c.ok:
            res.fail(f"{rep.filter}: {c.name}", c.witness)


@_timed
def filter_suite(g: Graph, bound: int = 2, trunc: int = 5, max_excluded: int = 3,
                length_ns=(0, 1, 2)) -> SuiteResult:
    res = SuiteResult("filter-witnesses")
    filters = [topo.LengthFilter(n) for n in length_ns] + cofinite_filters(g, bound, max_excluded)
    checks = 0
    for filt in filters:
        rep = topo.filter_report(filt, g, bound, trunc)
        checks += len(rep.checks)
        _merge(res, rep)
    res.details.update(graph=str(g), filters=len(filters), checks=checks, bound=bound, trunc=trunc)
    return res


@_timed
def coarsest_suite(g: Graph, bound: int, trunc: int, max_excluded: int) -> SuiteResult:
    res = SuiteResult("coarsest")
    filters = cofinite_filters(g, bound, max_excluded)
    for filt in filters:
        c = topo.coarsest_identity_check(filt.base_set(), g, trunc)
        if not c.ok:
            res.fail(str(filt), c.witness)
    res.details.update(graph=str(g), filters=len(filters), trunc=trunc)
    return res


@_timed
def main1_suite(g: Graph, trunc: int, ns=(0, 1, 2)) -> SuiteResult:
    res = SuiteResult("main1")
    spec = default_spec(g)
    for n in ns:
        c = topo.main1_identity_check(spec, n, trunc)
        if not c.ok:
            res.fail(f"n={n}", c.witness)
    res.details.update(graph=str(g), ns=list(ns), trunc=trunc)
    return res


def word_pool(g: Graph, bound: int) -> list[tuple[int, ...]]:
    """Polycyclic words that occur in images at ``bound``, plus two that never do."""
    spec = default_spec(g)
    words = {embed_element(spec, GisElement(p, Path(p.end))).x for p in enumerate_paths(g, bound)}
    extra = [(spec.arity - 1,), (0, 0)]
    return sorted(words) + [w for w in extra if w not in words]


@_timed
def main2_suite(g: Graph, trunc: int, max_excluded: int = 2, bound: int = 1) -> SuiteResult:
    res = SuiteResult("main2")
    spec = default_spec(g)
    words = word_pool(g, bound)
    paths = enumerate_paths(g, bound)
    n = 0
    for k in range(max_excluded + 1):
        for ws in combinations(words, k):
            n += 1
            c = topo.main2_continuity(spec, ws, trunc)
            if not c.ok:
                res.fail(f"continuity {ws}", c.witness)
        for ps in combinations(paths, k):
            n += 1
            c = topo.main2_openness(spec, ps, trunc)
            if not c.ok:
                res.fail(f"openness {ps}", c.witness)
    res.details.update(graph=str(g), trunc=trunc, cases=n)
    return res


@_timed
def ladder_suite(N: int, max_removed: int = 2) -> SuiteResult:
    rep = topo.ladder_example_suite(N, max_removed)
    res = SuiteResult("ladder")
    _merge(res, rep)
    res.details.update(rep.to_dict())
    return res


def topology_suites(g: Graph, cfg: SuiteConfig) -> list[SuiteResult]:
    out = [
        filter_suite(g, cfg.topo_bound, cfg.trunc, cfg.max_excluded),
        coarsest_suite(g, cfg.max_len, cfg.max_len, min(cfg.max_excluded, 2)),
        main1_suite(g, cfg.trunc),
        main2_suite(g, cfg.max_len, 2),
    ]
    if g.name.startswith("ladder:"):
        out.append(ladder_suite(int(g.name.split(":")[1])))
    return out


def run_suite(name: str, g: Graph, cfg: SuiteConfig) -> list[SuiteResult]:
    if name == "axioms":
        return [axioms_suite(g, cfg.max_len)]
    if name == "embedding":
        return [embedding_suite(g, cfg.max_len)]
    if name == "p2":
        return [p2_suite(g, cfg.p2_bound, cfg.code_max)]
    if name == "confluence":
        return [confluence_suite(cfg.seed, cfg.samples, cfg.sample_len, cfg.hom_len),
                rose_isomorphism_suite()]
    if name == "topology":
        return topology_suites(g, cfg)
    if name == "all":
        out = []
        for sub in ("axioms", "embedding", "p2", "confluence", "topology"):
            out.extend(run_suite(sub, g, cfg))
        return out
    raise ValueError(f"unknown suite {name!r}")
