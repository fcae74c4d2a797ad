"""Filter-generated topologies on G(E), checked on a finite truncation window.

A filter on Path(E) is given by a base. Nonzero elements are isolated and
the basic neighbourhoods of zero are

    U_F(0) = {a b^-1 : a, b in F} | {0}

for base sets F. Every statement here is decided on the window of paths of
length ``<= trunc``; path sets are predicates defined on all of Path(E), so
only the sweeps are truncated.

"Ideal" means extension-closed: ``u in A`` implies ``u e in A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence, Union

from ._zero import ZERO
from .embedding import EmbeddingSpec, embed_element
from .gis import Element, GisElement, enumerate_elements, idempotent, invert, multiply, phi, psi
from .graph import (Graph, Path, comparable_paths, concat, descendants, enumerate_paths,
                    extensions, graph_prefixes, ladder, strip_prefix)
from .polycyclic import min_word_length


class CounterexampleError(AssertionError):
    """A containment or identity failed; ``witness`` holds the offending data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NoIdealBase(CounterexampleError):
    pass


class PathSet:
    """A set of paths given by a membership test."""

    def __init__(self, test: Callable[[Path], bool], label: str):
        self.test = test
        self.label = label

    def __contains__(self, p: Path) -> bool:
        return self.test(p)

    def within(self, window: Iterable[Path]) -> frozenset[Path]:
        return frozenset(p for p in window if self.test(p))

    def __repr__(self):
        return f"PathSet({self.label})"


ALL_PATHS = PathSet(lambda p: True, "Path(E)")


def longer_than(n: int) -> PathSet:
    """``U_n = {u : |u| > n}``."""
    return PathSet(lambda p: len(p) > n, f"U_{n}")


def cofinite(excluded: Iterable[Path]) -> PathSet:
    ex = frozenset(excluded)
    return PathSet(lambda p: p not in ex, f"Path(E) \\ {sorted(ex, key=Path.sort_key)}")


def finite_set(members: Iterable[Path], label: str = "") -> PathSet:
    ms = frozenset(members)
    return PathSet(ms.__contains__, label or f"{sorted(ms, key=Path.sort_key)}")


@dataclass(frozen=True)
class LengthFilter:
    """The filter generated by ``U_m``; ``n`` picks the base set ``U_n`` in use."""

    n: int

    def base_set(self) -> PathSet:
        return longer_than(self.n)

    def __str__(self):
        return f"F_omega(U_{self.n})"


@dataclass(frozen=True)
class CofiniteFilter:
    """The cofinite filter; ``excluded`` picks the base set in use."""

    excluded: frozenset[Path] = frozenset()

    def base_set(self) -> PathSet:
        return cofinite(self.excluded)

    def __str__(self):
        return f"F_cf(excluding {sorted(self.excluded, key=Path.sort_key)})"


@dataclass(frozen=True)
class ExplicitBase:
    """A filter given by finitely many base sets, trusted up to ``trunc``."""

    sets: tuple[PathSet, ...]
    trunc: int
    label: str = "explicit"

    def base_set(self) -> PathSet:
        return self.sets[0]

    def __str__(self):
        return f"{self.label}({len(self.sets)} base sets)"


FilterSpec = Union[LengthFilter, CofiniteFilter, ExplicitBase]


@dataclass
class Check:
    name: str
    status: str = "pass"
    witness: str | None = None

    @property
    def ok(self):
        return self.status == "pass"

    def to_dict(self):
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class TopologyReport:
    filter: str
    truncation: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    @property
    def status(self):
        return "pass" if self.ok else "fail"

    def run(self, name: str, fn: Callable, *args, **kwargs):
        """Run ``fn``; a returned Check is recorded as is, anything else counts as pass."""
        try:
            res = fn(*args, **kwargs)
        except CounterexampleError as exc:
            self.checks.append(Check(name, "fail", f"{exc} {exc.witness!r}"))
            return None
        if isinstance(res, Check):
            res.name = name
            self.checks.append(res)
        else:
            self.checks.append(Check(name))
        return res

    def to_dict(self):
        return {"filter": self.filter, "truncation": self.truncation,
                "status": self.status, "checks": [c.to_dict() for c in self.checks]}


def _fail(name: str, witness) -> Check:
    return Check(name, "fail", repr(witness))


def _in_nbhd(members: frozenset[Path], x: Element) -> bool:
    return x is ZERO or (x.u in members and x.v in members)


def nbhd_contains(F: PathSet, x: Element) -> bool:
    return x is ZERO or (x.u in F and x.v in F)


def contains_base_set(filt: FilterSpec, S: PathSet, window: Sequence[Path]) -> bool:
    """Does ``S`` contain a base set of an explicit filter, within the window?"""
    inside = S.within(window)
    return any(B.within(window) <= inside for B in filt.sets)


# Topological-filter conditions

def condition_i_set(F: PathSet, a: Path, b: Path) -> PathSet:
    def test(p):
        if p not in F:
            return False
        k = strip_prefix(b, p)
        return k is None or concat(a, k) in F
    return PathSet(test, f"{F.label} minus b-extensions for a={a}, b={b}")


def check_condition_i(filt: FilterSpec, g: Graph, a: Path, b: Path, trunc: int) -> Check:
    """``F_1 = F \\ {b k : a k not in F}`` is again in the filter."""
    if a.end != b.end:
        raise ValueError(f"r(a) != r(b) for a={a}, b={b}")
    window = enumerate_paths(g, trunc)
    F = filt.base_set()
    F1 = condition_i_set(F, a, b)
    inside = F1.within(window)
    if isinstance(filt, LengthFilter):
        need = longer_than(filt.n + len(b)).within(window)
        missing = need - inside
        if missing:
            return _fail("condition-i", {"a": a, "b": b, "missing": sorted(missing, key=Path.sort_key)})
        return Check("condition-i")
    if isinstance(filt, CofiniteFilter):
        # ak not in F means ak is excluded, so each excluded path yields at most one bk
        removed = set()
        for c in filt.excluded:
            k = strip_prefix(a, c)
            if k is not None:
                removed.add(concat(b, k))
        expected = frozenset(p for p in window if p not in filt.excluded and p not in removed)
        if inside != expected:
            return _fail("condition-i", {"a": a, "b": b, "diff": sorted(inside ^ expected, key=Path.sort_key)})
        return Check("condition-i")
    if not contains_base_set(filt, F1, window):
        return _fail("condition-i", {"a": a, "b": b})
    return Check("condition-i")


def check_condition_ii(filt: FilterSpec, g: Graph, trunc: int) -> Check:
    """Every cofinite set is in the filter, and (for the length and cofinite
    filters) the base set has a finite complement that stops growing with
    the window."""
    window = enumerate_paths(g, trunc)
    for p in window:
        co = cofinite([p])
        if isinstance(filt, LengthFilter):
            found = longer_than(len(p)).within(window) <= co.within(window)
        elif isinstance(filt, CofiniteFilter):
            found = True
        else:
            found = contains_base_set(filt, co, window)
        if not found:
            return _fail("condition-ii", {"cofinite set missing": co.label})
    if isinstance(filt, (LengthFilter, CofiniteFilter)):
        F = filt.base_set()
        outside = [frozenset(p for p in enumerate_paths(g, t) if p not in F) for t in (trunc, trunc + 1)]
        if outside[0] != outside[1]:
            return _fail("condition-ii", {"complement grows": sorted(outside[1] - outside[0], key=Path.sort_key)})
    return Check("condition-ii")


def is_ideal(S: PathSet, g: Graph, trunc: int) -> bool:
    """Extension-closed up to ``trunc``: ``u in S, |u| < trunc`` gives ``u e in S``."""
    if trunc < 1:
        raise ValueError("trunc must be at least 1")
    return all(q in S for p in enumerate_paths(g, trunc - 1) if p in S for q in extensions(g, p))


def prefix_closure(g: Graph, paths: Iterable[Path]) -> frozenset[Path]:
    return frozenset(q for p in paths for q in graph_prefixes(g, p))


def largest_ideal_inside(filt: CofiniteFilter, g: Graph) -> PathSet:
    """Complement of the prefix closure of the excluded set."""
    closed = prefix_closure(g, filt.excluded)
    return PathSet(lambda p: p not in closed,
                   f"Path(E) \\ {sorted(closed, key=Path.sort_key)}")


def largest_ideal_within(S: PathSet, g: Graph, trunc: int) -> frozenset[Path]:
    """Brute force: window paths all of whose window extensions lie in ``S``."""
    return frozenset(p for p in enumerate_paths(g, trunc)
                     if all(q in S for q in descendants(g, p, trunc)))


# Continuity witnesses

def _sweep(x: Element, H_members, F: PathSet, elements, left: bool):
    for y in elements:
        if not _in_nbhd(H_members, y):
            continue
        z = multiply(y, x) if left else multiply(x, y)
        if not nbhd_contains(F, z):
            side = "U_G(0) x" if left else "x U_H(0)"
            raise CounterexampleError(f"{side} leaves U_F(0)", {"x": x, "y": y, "product": z})


def _translation_witness(a: Path, b: Path, F: PathSet, g: Graph, label: str) -> PathSet:
    pre = frozenset(graph_prefixes(g, b))

    def test(p):
        if p not in F or p in pre:
            return False
        k = strip_prefix(b, p)
        return k is None or concat(a, k) in F
    return PathSet(test, label)


def witness_right_translation(g: Graph, x: GisElement, F: PathSet, trunc: int,
                              elements: Sequence[Element] | None = None) -> PathSet:
    """``H = F \\ (P_b | {b k : a k not in F})`` for ``x = a b^-1``; checks ``x U_H(0) <= U_F(0)``."""
    if x is ZERO:
        raise ValueError("x must be nonzero")
    H = _translation_witness(x.u, x.v, F, g, f"H[{F.label}; {x}]")
    elements = elements if elements is not None else enumerate_elements(g, trunc)
    _sweep(x, H.within(enumerate_paths(g, trunc)), F, elements, left=False)
    return H


def witness_left_translation(g: Graph, x: GisElement, F: PathSet, trunc: int,
                             elements: Sequence[Element] | None = None) -> PathSet:
    """``G = F \\ (P_a | {a k : b k not in F})``; checks ``U_G(0) x <= U_F(0)``."""
    if x is ZERO:
        raise ValueError("x must be nonzero")
    G = _translation_witness(x.v, x.u, F, g, f"G[{F.label}; {x}]")
    elements = elements if elements is not None else enumerate_elements(g, trunc)
    _sweep(x, G.within(enumerate_paths(g, trunc)), F, elements, left=True)
    return G


def check_product_closed(T: PathSet, F: PathSet, g: Graph, trunc: int,
                         elements: Sequence[Element] | None = None):
    """``U_T(0) U_T(0) <= U_T(0) <= U_F(0)`` over the window."""
    window = enumerate_paths(g, trunc)
    t = T.within(window)
    if not t <= F.within(window):
        raise CounterexampleError("T is not inside F", sorted(t - F.within(window), key=Path.sort_key))
    elements = elements if elements is not None else enumerate_elements(g, trunc)
    by_u: dict[Path, list[Element]] = {}
    for x in elements:
        if x is not ZERO and _in_nbhd(t, x):
            by_u.setdefault(x.u, []).append(x)
    # (a b^-1)(c d^-1) is zero unless c is comparable with b, and zero is in U_T(0)
    for row in by_u.values():
        for x in row:
            for c in comparable_paths(g, x.v, trunc):
                for y in by_u.get(c, ()):
                    z = multiply(x, y)
                    if not nbhd_contains(T, z):
                        raise CounterexampleError("U_T(0) U_T(0) leaves U_T(0)",
                                                  {"x": x, "y": y, "product": z})


def witness_product(filt: FilterSpec, g: Graph, trunc: int,
                    elements: Sequence[Element] | None = None) -> PathSet:
    """An ideal ``T`` inside the base set with ``U_T(0) U_T(0) <= U_F(0)``.

    Raises NoIdealBase when the filter has no ideal base set inside some
    base set, as far as the window can tell.
    """
    window = enumerate_paths(g, trunc)
    if isinstance(filt, LengthFilter):
        T = filt.base_set()
    elif isinstance(filt, CofiniteFilter):
        T = largest_ideal_inside(filt, g)
    else:
        T = None
        for B in filt.sets:
            members = largest_ideal_within(B, g, trunc)
            ideal = finite_set(members, f"ideal inside {B.label}")
            if not contains_base_set(filt, ideal, window):
                raise NoIdealBase(f"no ideal base up to truncation {trunc}",
                                  {"base set": B.label, "largest ideal": sorted(members, key=Path.sort_key)})
            T = T or ideal
    if not is_ideal(T, g, trunc):
        raise NoIdealBase("witness is not extension-closed", T.label)
    check_product_closed(T, filt.base_set(), g, trunc, elements)
    return T


# Whole-space identities

def check_inversion_symmetry(F: PathSet, elements: Sequence[Element]) -> Check:
    for x in elements:
        if nbhd_contains(F, x) != nbhd_contains(F, invert(x)):
            return _fail("inversion-symmetry", x)
    return Check("inversion-symmetry")


def check_hausdorff(elements: Sequence[Element]) -> Check:
    """Each nonzero ``u v^-1`` is outside ``U_F(0)`` for ``F = Path(E) \\ {u, v}``."""
    for x in elements:
        if x is not ZERO and nbhd_contains(cofinite([x.u, x.v]), x):
            return _fail("hausdorff", x)
    return Check("hausdorff")


def coarsest_identity_check(F: PathSet, g: Graph, trunc: int) -> Check:
    """``U_F(0) = phi^-1(H) & psi^-1(H)`` with ``H = {u u^-1 : u in F} | {0}``."""
    window = enumerate_paths(g, trunc)
    H = {idempotent(u) for u in window if u in F} | {ZERO}
    for x in enumerate_elements(g, trunc):
        lhs = nbhd_contains(F, x)
        rhs = phi(x) in H and psi(x) in H
        if lhs != rhs:
            return _fail("coarsest-identity", {"x": x, "U_F": lhs, "preimage": rhs})
    return Check("coarsest-identity")


def main1_identity_check(spec: EmbeddingSpec, n: int, trunc: int) -> Check:
    """``F(U_n(0)) = image & V_{n+1}(0)``, compared element by element."""
    for x in enumerate_elements(spec.graph, trunc):
        in_u = x is ZERO or min(len(x.u), len(x.v)) > n
        in_v = min_word_length(embed_element(spec, x)) > n + 1
        if in_u != in_v:
            return _fail("main1-identity", {"x": x, "in U_n": in_u, "in V_n+1": in_v})
    return Check("main1-identity")


def main2_continuity(spec: EmbeddingSpec, excluded_words: Iterable[tuple[int, ...]], trunc: int) -> Check:
    """For cofinite ``F`` on the polycyclic side, ``H = {a : f(a a^-1) in A}``
    satisfies ``f(U_H(0)) <= U_F(0)``."""
    excluded = frozenset(tuple(w) for w in excluded_words)

    def in_F(w):
        return w not in excluded

    def in_H(a):
        fa = embed_element(spec, idempotent(a))
        return fa.x == fa.y and in_F(fa.x)

    H = PathSet(in_H, f"H[words except {sorted(excluded)}]")
    window = enumerate_paths(spec.graph, trunc)
    dropped = [p for p in window if p not in H]
    if len(dropped) > len(excluded):
        return _fail("main2-continuity", {"H not cofinite": dropped})
    for x in enumerate_elements(spec.graph, trunc):
        if nbhd_contains(H, x):
            fx = embed_element(spec, x)
            if fx is not ZERO and not (in_F(fx.x) and in_F(fx.y)):
                return _fail("main2-continuity", {"x": x, "f(x)": fx})
    return Check("main2-continuity")


def main2_openness(spec: EmbeddingSpec, excluded_paths: Iterable[Path], trunc: int) -> Check:
    """For cofinite ``H`` on the graph side, ``G = Path(rose) \\ {u_i, v_i}``
    where ``f(a_i) = u_i v_i^-1``, satisfies ``U_G(0) & image <= f(U_H(0))``."""
    excluded = frozenset(excluded_paths)
    H = cofinite(excluded)
    banned = set()
    for a in excluded:
        fa = embed_element(spec, GisElement(a, Path(a.end)))
        banned.update((fa.x, fa.y))
    for x in enumerate_elements(spec.graph, trunc):
        fx = embed_element(spec, x)
        in_G = fx is ZERO or (fx.x not in banned and fx.y not in banned)
        if in_G and not nbhd_contains(H, x):
            return _fail("main2-openness", {"x": x, "f(x)": fx})
    return Check("main2-openness")


def main2_witnesses(spec: EmbeddingSpec, direction: str, data, trunc: int) -> Check:
    if direction == "continuity":
        return main2_continuity(spec, data, trunc)
    if direction == "openness":
        return main2_openness(spec, data, trunc)
    raise ValueError(f"unknown direction {direction!r}")


# Suites

def filter_report(filt: FilterSpec, g: Graph, bound: int, trunc: int) -> TopologyReport:
    """Translation witnesses for every nonzero element at ``bound``, the
    product witness, and conditions (i)-(iii), all swept at ``trunc``."""
    rep = TopologyReport(str(filt), trunc)
    F = filt.base_set()
    window = enumerate_paths(g, trunc)
    elements = enumerate_elements(g, trunc)
    for x in enumerate_elements(g, bound):
        if x is ZERO:
            continue
        rep.run(f"right-translation {x}", witness_right_translation, g, x, F, trunc, elements)
        rep.run(f"left-translation {x}", witness_left_translation, g, x, F, trunc, elements)
    for a in window:
        for b in window:
            if a.end == b.end:
                rep.run(f"condition-i a={a} b={b}", check_condition_i, filt, g, a, b, trunc)
    rep.run("condition-ii", check_condition_ii, filt, g, trunc)
    rep.run("condition-iii (ideal T, U_T U_T <= U_T)", witness_product, filt, g, trunc, elements)
    rep.run("inversion-symmetry", check_inversion_symmetry, F, elements)
    rep.run("hausdorff", check_hausdorff, elements)
    return rep


def excluded_sets(paths: Sequence[Path], max_size: int) -> list[frozenset[Path]]:
    return [frozenset(c) for k in range(max_size + 1) for c in combinations(paths, k)]


def ladder_filter(g: Graph, max_removed: int) -> ExplicitBase:
    """Base sets ``E0 \\ C`` for ``|C| <= max_removed`` (vertex paths only)."""
    verts = [Path(v) for v in g.vertices]
    sets = tuple(finite_set([v for v in verts if v not in c], f"E0 \\ {sorted(p.start for p in c)}")
                 for c in excluded_sets(verts, max_removed))
    return ExplicitBase(sets, trunc=1, label="cofinite subsets of E0")


def ladder_example_suite(N: int, max_removed: int = 2) -> TopologyReport:
    """The ladder graph: a topological inverse semigroup whose filter has no ideal base."""
    if N < 2:
        raise ValueError("need at least two rungs")
    g = ladder(N)
    rep = TopologyReport(f"cofinite subsets of E0 on ladder:{N}", 1)
    window = enumerate_paths(g, 1)
    elements = enumerate_elements(g, 1)
    verts = [Path(v) for v in g.vertices]

    def translations():
        for x in elements:
            if x is ZERO:
                continue
            right = frozenset(v for v in verts if v.start != x.v.start)
            left = frozenset(v for v in verts if v.start != x.u.start)
            for y in elements:
                if _in_nbhd(right, y) and multiply(x, y) is not ZERO:
                    raise CounterexampleError("x U_F(0) not in {0}", {"x": x, "y": y})
                if _in_nbhd(left, y) and multiply(y, x) is not ZERO:
                    raise CounterexampleError("U_F(0) x not in {0}", {"x": x, "y": y})

    def idempotent_nbhds():
        for c in excluded_sets(verts, len(verts)):
            F = frozenset(c)
            U = [x for x in elements if _in_nbhd(F, x)]
            prod = {multiply(x, y) for x in U for y in U}
            if prod != set(U):
                raise CounterexampleError("U_F U_F != U_F", sorted(p.start for p in F))

    odd = {Path(v) for v in g.vertices if int(v) % 2 == 1}

    def no_ideal_base():
        for c in excluded_sets(verts, max_removed):
            F = frozenset(v for v in verts if v not in c)
            outside = frozenset(p for p in window if p not in F)
            T = largest_ideal_inside(CofiniteFilter(outside), g)
            kept = T.within(window)
            if kept & odd:
                raise CounterexampleError("largest ideal keeps an odd vertex", sorted(kept & odd, key=Path.sort_key))
            if kept != largest_ideal_within(finite_set(F), g, 1):
                raise CounterexampleError("prefix-closure and brute-force ideals differ", c)

    rep.run("translations into {0}", translations)
    rep.run("U_F U_F = U_F for F inside E0", idempotent_nbhds)
    rep.run("largest ideal drops every odd vertex", no_ideal_base)

    def explicit_filter_fails():
        try:
            witness_product(ladder_filter(g, max_removed), g, 1, elements)
        except NoIdealBase:
            return Check("", "pass", f"no ideal base up to N={N}")
        raise CounterexampleError("an ideal base set was found", None)

    rep.run("no ideal base (truncated)", explicit_filter_fails)
    return rep
