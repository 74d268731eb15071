import pytest

from oracles import brute_arcs, brute_edges
from redpower.graph_core import DiGraph, SimpleGraph, classify_shape, induced_subgraph
from redpower.group_core import build_group, cyclic
from redpower.powergraph import (P, P_STAR, POWER, REDUCED, RP, RP_STAR, GraphVariant,
                                 UnsupportedFamily, build, decompose_known, element_of,
                                 vertex_of)
from redpower.theorems import default_catalog

CATALOG = default_catalog(32)
VARIANTS = [GraphVariant(f, d, p) for f in (POWER, REDUCED) for d in (False, True) for p in (False, True)]


def test_variant_basics():
    g = cyclic(6)
    assert RP.vertex_count(g) == 6 and RP_STAR.vertex_count(g) == 5
    assert GraphVariant(POWER, directed=True, proper=True).symbol == "->P*"
    assert element_of(RP_STAR, 0) == 1 and vertex_of(RP_STAR, 3) == 2 and vertex_of(RP, 3) == 3
    with pytest.raises(ValueError):
        vertex_of(RP_STAR, 0)
    with pytest.raises(ValueError):
        GraphVariant("enhanced")


def test_z4_proper_is_path_through_involution():
    g = build(cyclic(4), RP_STAR)
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    assert g.label(1) == "2"


def test_q8_proper_is_k16():
    g = build(build_group("Q8"), RP_STAR)
    assert classify_shape(g).multipartite == (1, 6)
    center = next(v for v in range(g.n) if g.degree(v) == 6)
    assert g.label(center) == "a^2"


def test_z6_proper_is_k23():
    g = build(cyclic(6), RP_STAR)
    assert classify_shape(g).multipartite == (2, 3)
    gens = [v for v in range(g.n) if g.degree(v) == 3]
    assert sorted(g.label(v) for v in gens) == ["1", "5"]


@pytest.mark.parametrize("g", [g for g in CATALOG if g.order <= 16], ids=lambda g: g.label)
@pytest.mark.parametrize("variant", VARIANTS, ids=lambda v: v.symbol)
def test_builder_matches_inclusion_oracle(g, variant):
    built = build(g, variant)
    assert built.n == variant.vertex_count(g)
    if variant.directed:
        assert isinstance(built, DiGraph)
        assert set(built.arcs()) == brute_arcs(g.table, variant.family, variant.proper)
    else:
        assert isinstance(built, SimpleGraph)
        assert set(built.edges()) == brute_edges(g.table, variant.family, variant.proper)


@pytest.mark.parametrize("g", CATALOG, ids=lambda g: g.label)
def test_structural_properties(g):
    rp, p, rps = build(g, RP), build(g, P), build(g, RP_STAR)
    assert set(rp.edges()) <= set(p.edges())
    assert set(build(g, GraphVariant(REDUCED, True)).arcs()) <= set(build(g, GraphVariant(POWER, True)).arcs())
    assert rp.degree(0) == g.order - 1
    assert induced_subgraph(rp, range(1, g.order)) == rps
    assert induced_subgraph(p, range(1, g.order)) == build(g, P_STAR)
    for v in VARIANTS:
        if v.directed:
            assert build(g, v).underlying() == build(g, GraphVariant(v.family, False, v.proper))
    lat = g.lattice
    for cls in lat.classes:
        for i, x in enumerate(cls):
            for y in cls[i + 1:]:
                assert not rp.has_edge(x, y)
                assert p.has_edge(x, y)
                assert rp.adj[x] == rp.adj[y]


def test_labels_are_element_names():
    g = build_group("D8")
    graph = build(g, RP_STAR)
    assert graph.labels == tuple(g.name(x) for x in range(1, 8))


@pytest.mark.parametrize("spec", ["D6", "D8", "D24", "D30", "Q8", "Q12", "Q20", "Q32", "SD16",
                                  "SD24", "SD32"])
def test_decompose_known_matches_build(spec):
    g = build_group(spec)
    ks = decompose_known(g)
    assert ks.graph == build(g, RP)


def test_decompose_known_expressions():
    d6 = decompose_known(build_group("D6"))
    assert d6.expression.endswith("= K_1 + K̄_5")
    assert d6.parts["reflections"] == [3, 4, 5]
    q8 = decompose_known(build_group("Q8"))
    assert q8.parts["central_involution"] == [2]
    sd = decompose_known(build_group("SD16"))
    assert len(sd.parts["involution_outer"]) == 4 and len(sd.parts["order4_outer"]) == 4
    g = build(build_group("SD16"), RP)
    for v in sd.parts["involution_outer"]:
        assert g.neighbors(v) == [0]
    for v in sd.parts["order4_outer"]:
        assert g.neighbors(v) == [0, 4]


def test_decompose_known_unsupported():
    with pytest.raises(UnsupportedFamily):
        decompose_known(cyclic(8))
