import pytest
from hypothesis import given, settings, strategies as st

from gisemi import ZERO
from gisemi.embedding import default_spec
from gisemi.gis import GisElement, enumerate_elements, multiply
from gisemi.graph import Path, enumerate_paths, g1, ladder, rose
from gisemi.topology import (ALL_PATHS, CofiniteFilter, CounterexampleError, LengthFilter, NoIdealBase,
                             check_condition_i, check_condition_ii, check_hausdorff,
                             check_inversion_symmetry, check_product_closed, coarsest_identity_check,
                             cofinite, condition_i_set, finite_set, is_ideal, ladder_example_suite,
                             ladder_filter, largest_ideal_inside, largest_ideal_within, longer_than,
                             main1_identity_check, main2_continuity, main2_openness, nbhd_contains,
                             filter_report, witness_left_translation, witness_product,
                             witness_right_translation)


def el(g, u, v):
    return GisElement(g.path(*u), g.path(*v))


def test_neighbourhood_membership(G1):
    e, f = G1.path("v1", "e"), G1.path("v1", "f")
    x = GisElement(e, f)
    assert nbhd_contains(longer_than(0), x)
    assert not nbhd_contains(longer_than(1), x)
    assert not nbhd_contains(cofinite([f]), x)
    assert nbhd_contains(cofinite([G1.vertex("v1")]), x)
    assert nbhd_contains(finite_set([]), ZERO)


def test_condition_i_set_by_hand(G1):
    e, f, v2 = G1.path("v1", "e"), G1.path("v1", "f"), G1.vertex("v2")
    # a = e, b = v2: every path b k with e k outside F is dropped
    F1 = condition_i_set(cofinite([e]), e, v2)
    assert v2 not in F1                     # e = a . v2 is excluded
    assert f in F1 and G1.vertex("v1") in F1
    assert check_condition_i(CofiniteFilter(frozenset({e})), G1, e, v2, 3).ok


def _condition_i_oracle(F, g, a, b, trunc):
    """Brute force: remove b k for every k with b k in the window and a k not in F."""
    window = enumerate_paths(g, trunc)
    removed = set()
    for p in window:
        if p.start == b.start and p.edges[:len(b.edges)] == b.edges and (len(b.edges) < len(p.edges) or p == b):
            k = p.edges[len(b.edges):]
            ak = Path(a.start, a.edges + k, p.end)
            if ak not in F:
                removed.add(p)
    return frozenset(p for p in window if p in F) - removed


@pytest.mark.parametrize("g", [g1(), ladder(3)], ids=str)
def test_condition_i_matches_oracle(g):
    window = enumerate_paths(g, 3)
    for F in (longer_than(1), cofinite(window[:2]), ALL_PATHS):
        for a in window:
            for b in window:
                if a.end == b.end:
                    assert condition_i_set(F, a, b).within(window) == _condition_i_oracle(F, g, a, b, 3)


@pytest.mark.parametrize("filt", [LengthFilter(0), LengthFilter(2), CofiniteFilter(),
                                  CofiniteFilter(frozenset({Path("v1")}))], ids=str)
def test_filter_conditions_on_g1(G1, filt):
    window = enumerate_paths(G1, 3)
    for a in window:
        for b in window:
            if a.end == b.end:
                assert check_condition_i(filt, G1, a, b, 4).ok
    assert check_condition_ii(filt, G1, 4).ok


def test_condition_ii_rejects_finite_base(G1):
    from gisemi.topology import ExplicitBase
    filt = ExplicitBase((finite_set([Path("v1")]),), trunc=2)
    assert not check_condition_ii(filt, G1, 2).ok


def test_is_ideal(G1, ladder4):
    assert is_ideal(longer_than(1), G1, 4)
    assert is_ideal(cofinite([Path("v1"), G1.path("v1", "e")]), G1, 4)
    # dropping e alone leaves v1 whose extension e is missing
    assert not is_ideal(cofinite([G1.path("v1", "e")]), G1, 4)
    # the odd vertex 1 extends to the path 1-2 which is not in E0
    assert not is_ideal(finite_set([Path("1")]), ladder4, 1)
    with pytest.raises(ValueError):
        is_ideal(ALL_PATHS, G1, 0)


def test_largest_ideal_examples(G1):
    e = G1.path("v1", "e")
    T = largest_ideal_inside(CofiniteFilter(frozenset({e})), G1)
    window = enumerate_paths(G1, 3)
    assert frozenset(p for p in window if p not in T) == {Path("v1"), e}
    g = ladder(3)
    F = [Path(v) for v in g.vertices if v != "1"]
    outside = frozenset(p for p in enumerate_paths(g, 1) if p not in F)
    kept = largest_ideal_inside(CofiniteFilter(outside), g).within(enumerate_paths(g, 1))
    assert kept == {Path("2"), Path("4"), Path("6")}


@settings(max_examples=60)
@given(st.sampled_from([g1(), ladder(3), rose(2)]), st.data())
def test_largest_ideal_matches_brute_force(g, data):
    window = enumerate_paths(g, 3)
    ex = data.draw(st.sets(st.sampled_from(window), max_size=3))
    T = largest_ideal_inside(CofiniteFilter(frozenset(ex)), g)
    assert T.within(window) == largest_ideal_within(cofinite(ex), g, 3)
    assert is_ideal(T, g, 3)


def test_translation_witnesses(G1):
    x = el(G1, ("v1", "e"), ("v1", "f"))
    F = longer_than(0)
    H = witness_right_translation(G1, x, F, 4)
    G = witness_left_translation(G1, x, F, 4)
    window = enumerate_paths(G1, 4)
    for y in enumerate_elements(G1, 4):
        if nbhd_contains(H, y):
            assert nbhd_contains(F, multiply(x, y))
        if nbhd_contains(G, y):
            assert nbhd_contains(F, multiply(y, x))
    assert G1.path("v1", "f") not in H.within(window)


def test_translation_witness_reports_counterexample(G1, monkeypatch):
    import gisemi.topology as topo
    x = el(G1, ("v1", "e"), ("v1", "f"))
    # an over-large H lets x f e^-1 = e e^-1 out of U_1(0)
    monkeypatch.setattr(topo, "_translation_witness", lambda a, b, F, g, label: ALL_PATHS)
    with pytest.raises(CounterexampleError) as info:
        witness_right_translation(G1, x, longer_than(1), 3)
    assert "product" in info.value.witness


def test_product_witness(G1):
    T = witness_product(LengthFilter(1), G1, 4)
    assert T.label == "U_1"
    T = witness_product(CofiniteFilter(frozenset({G1.path("v1", "e")})), G1, 4)
    assert Path("v1") not in T
    with pytest.raises(CounterexampleError):
        check_product_closed(ALL_PATHS, longer_than(0), G1, 3)


def test_ladder_filter_has_no_ideal_base():
    g = ladder(3)
    with pytest.raises(NoIdealBase) as info:
        witness_product(ladder_filter(g, 1), g, 1)
    assert "largest ideal" in info.value.witness


def test_symmetry_and_hausdorff(G1):
    els = enumerate_elements(G1, 3)
    for F in (longer_than(1), cofinite([Path("v2")])):
        assert check_inversion_symmetry(F, els).ok
    assert check_hausdorff(els).ok


@pytest.mark.parametrize("F", [longer_than(0), cofinite([Path("v1")]), cofinite([]), finite_set([Path("v2")])],
                         ids=repr)
def test_coarsest_identity(G1, F):
    assert coarsest_identity_check(F, G1, 3).ok


@pytest.mark.parametrize("g", [g1(), rose(2)], ids=str)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_main1_identity(g, n):
    assert main1_identity_check(default_spec(g), n, 4).ok


def test_main1_at_the_edge_of_the_window(G1):
    # with n = 2 and trunc = 3 only the paths of length 3 survive in U_n(0)
    spec = default_spec(G1)
    assert main1_identity_check(spec, 2, 3).ok
    assert main1_identity_check(spec, 3, 3).ok


def test_main2(G1):
    spec = default_spec(G1)
    assert main2_continuity(spec, [(0, 2), (1,)], 3).ok
    assert main2_continuity(spec, [(3, 3, 3)], 3).ok    # not an image word
    assert main2_openness(spec, [Path("v1"), G1.path("v1", "f")], 3).ok
    assert main2_openness(spec, [], 3).ok


def test_filter_report_on_g1(G1):
    rep = filter_report(CofiniteFilter(frozenset({Path("v2")})), G1, 1, 3)
    assert rep.ok, [c for c in rep.checks if not c.ok]
    d = rep.to_dict()
    assert d["status"] == "pass" and d["truncation"] == 3


def test_ladder_example_suite():
    rep = ladder_example_suite(3)
    assert rep.ok, [c for c in rep.checks if not c.ok]
    with pytest.raises(ValueError):
        ladder_example_suite(1)
