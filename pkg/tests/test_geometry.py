"""Projective points, polarity graphs, the Hermitian unital, character graphs."""

from __future__ import annotations

from collections import Counter

import pytest

from ramseyforge import geometry as geo
from ramseyforge import graphcore as gc
from ramseyforge.gf import quadratic_character, smallest_nonresidue, spec_for


# --- projective points -------------------------------------------------------


def test_point_normalization():
    F = spec_for(5)
    a = geo.ProjectivePoint([F.element(2), F.element(4), F.element(1)])
    b = geo.ProjectivePoint([F.element(4), F.element(3), F.element(2)])  # 2x scaled
    assert a == b and hash(a) == hash(b)
    assert a.coords[0] == F.one()
    assert geo.ProjectivePoint(a.coords) == a  # idempotent
    with pytest.raises(ValueError):
        geo.ProjectivePoint([F.zero(), F.zero()])
    with pytest.raises(ValueError):
        geo.ProjectivePoint([F.one(), spec_for(3).one()])
    with pytest.raises(ValueError):
        geo.ProjectivePoint([])


def test_pg_point_counts():
    assert len(geo.enumerate_pg_points(1, spec_for(2))) == 3
    assert len(geo.enumerate_pg_points(2, spec_for(3))) == 13
    assert len(geo.enumerate_pg_points(2, spec_for(4))) == 21
    pts = geo.enumerate_pg_points(3, spec_for(5))
    assert len(pts) == (5**4 - 1) // 4 == len(set(pts))


def test_pg_point_order():
    F = spec_for(9)
    pts = geo.enumerate_pg_points(1, F)
    keys = [tuple(F.index(c) for c in p.coords) for p in pts]
    assert keys == sorted(keys)
    assert keys[0] == (0, F.index(F.one()))  # point at infinity first
    assert len(pts) == 10


def test_pg_point_guards():
    with pytest.raises(ValueError):
        geo.enumerate_pg_points(0, spec_for(3))
    with pytest.raises(ValueError):
        geo.enumerate_pg_points(7, spec_for(8))  # (8^8-1)/7 > 1e6


# --- polarity graphs ---------------------------------------------------------


def test_polarity_fano():
    G = geo.polarity_graph(2)
    assert G.n == 7
    assert Counter(G.degrees) == {3: 4, 2: 3}
    assert geo.polarity_absolute_points(2) == (2, 4, 5)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_polarity_parameters(q):
    G = geo.polarity_graph(q)
    absolute = geo.polarity_absolute_points(q)
    assert G.n == q * q + q + 1
    assert Counter(G.degrees) == {q: q + 1, q + 1: q * q}
    # absolute points are exactly the degree-q vertices
    assert set(absolute) == {v for v in range(G.n) if G.degrees[v] == q}
    if q <= 5:
        assert gc.is_pattern_free(G, gc.ForbiddenPattern.c4()) == (True, None)


def test_polarity_matches_direct_arithmetic():
    # re-derive q=3 adjacency with plain field arithmetic (no index tables)
    F = spec_for(3)
    pts = geo.enumerate_pg_points(2, F)
    edges = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dot = sum((a * b for a, b in zip(pts[i], pts[j])), F.zero())
            if not dot:
                edges.append((i, j))
    assert geo.polarity_graph(3) == gc.Graph.from_edges(len(pts), edges)


def test_polarity_large_order():
    G = geo.polarity_graph(27)
    assert G.n == 27 * 27 + 27 + 1
    assert Counter(G.degrees) == {27: 28, 28: 729}


def test_polarity_rejects():
    with pytest.raises(ValueError):
        geo.polarity_graph(6)
    with pytest.raises(ValueError):
        geo.polarity_graph(121)


# --- Hermitian unital --------------------------------------------------------


@pytest.mark.parametrize(
    "q,v,b", [(2, 9, 12), (3, 28, 63), (4, 65, 208)]
)
def test_unital_design(q, v, b):
    D = geo.hermitian_unital(q)
    assert D.v == v == q**3 + 1
    assert len(D.blocks) == b == q * q * (q * q - q + 1)
    assert D.block_size == q + 1
    assert D.point_degree == q * q
    assert D.is_steiner()


def test_unital_points_satisfy_form():
    # independent re-check: norms really sum to zero, via x^(q+1) directly
    D = geo.hermitian_unital(3)
    F = spec_for(9)
    for pt in D.points:
        s = sum((c**4 for c in pt.coords), F.zero())
        assert not s


@pytest.mark.parametrize("q,n,r,d", [(2, 12, 4, 3), (3, 63, 9, 4)])
def test_unital_line_hypergraph(q, n, r, d):
    H = geo.unital_line_hypergraph(q)
    assert H.n == n and H.r == r
    assert len(H.edges) == q**3 + 1
    assert H.is_regular() and H.regular_degree() == d


def test_unital_hypergraph_duality():
    D = geo.hermitian_unital(2)
    H = geo.unital_line_hypergraph(2)
    # hyperedge p contains block b iff block b contains point p
    for p, e in enumerate(H.edges):
        for b in e:
            assert p in D.blocks[b]


def test_unital_rejects():
    with pytest.raises(ValueError):
        geo.hermitian_unital(6)
    with pytest.raises(ValueError):
        geo.hermitian_unital(16)


def test_block_design_validation():
    F = spec_for(3)
    pts = geo.enumerate_pg_points(1, F)
    with pytest.raises(ValueError):
        geo.BlockDesign(pts, [(0, 1, 2), (0, 1, 3)])  # pair in two blocks
    with pytest.raises(ValueError):
        geo.BlockDesign(pts, [(0, 0, 1)])
    with pytest.raises(ValueError):
        geo.BlockDesign(pts, [(0, 1, 9)])
    with pytest.raises(ValueError):
        geo.BlockDesign(pts, [(0, 1), (2, 3), (0, 2)])  # mixed point degrees
    with pytest.raises(ValueError):
        geo.BlockDesign(pts, [(0, 1), (0, 2, 3)])  # mixed block sizes
    D = geo.BlockDesign(pts, [(0, 1), (2, 3)])
    assert D.block_size == 2 and D.point_degree == 1 and not D.is_steiner()


# --- character graphs --------------------------------------------------------


S1_VERTICES = {3: 1, 5: 3, 7: 3, 9: 5, 11: 5, 13: 7}
S1_CANONICAL_EDGES = {3: 0, 5: 0, 7: 2, 9: 6, 11: 3, 13: 8}


@pytest.mark.parametrize("q", sorted(S1_VERTICES))
def test_bip_s1(q):
    sym = geo.bip_graph(q, 1, "symmetrized")
    canon = geo.bip_graph(q, 1)
    assert sym.n == canon.n == S1_VERTICES[q]
    assert sym.edge_count == 0
    # the literal rule on canonical representatives is NOT edgeless for q >= 7
    assert canon.edge_count == S1_CANONICAL_EDGES[q]


SYM_COUNTS = {
    (5, 2): (10, 15),
    (7, 2): (28, 42),
    (9, 2): (36, 90),
    (11, 2): (66, 165),
    (13, 2): (78, 273),
    (3, 3): (15, 45),
    (5, 3): (65, 325),
}


@pytest.mark.parametrize("q,s", sorted(SYM_COUNTS))
def test_bip_symmetrized_counts(q, s):
    G = geo.bip_graph(q, s, "symmetrized")
    assert (G.n, G.edge_count) == SYM_COUNTS[(q, s)]
    assert len(set(G.degrees)) == 1  # vertex-transitive form => regular


def test_bip_freeness_small():
    for q in (5, 7):
        G = geo.bip_graph(q, 2, "symmetrized")
        assert gc.is_pattern_free(G, gc.ForbiddenPattern.clique(3)) == (True, None)
    for q in (3, 5):
        G = geo.bip_graph(q, 3, "symmetrized")
        assert gc.is_pattern_free(G, gc.ForbiddenPattern.clique(4)) == (True, None)
    # canonical variant keeps freeness only for small q
    assert gc.is_pattern_free(geo.bip_graph(5, 2), gc.ForbiddenPattern.clique(3))[0]
    assert not gc.is_pattern_free(geo.bip_graph(7, 2), gc.ForbiddenPattern.clique(3))[0]


def test_bip_neighborhoods():
    # neighborhood of any vertex induces the construction one rank down:
    # for s=2 an edgeless graph, for s=3 a triangle-free graph
    G = geo.bip_graph(7, 2, "symmetrized")
    for v in range(G.n):
        assert G.induced(list(G.neighbors(v))).edge_count == 0
    G = geo.bip_graph(5, 3, "symmetrized")
    for v in range(G.n):
        N = G.induced(list(G.neighbors(v)))
        assert gc.is_pattern_free(N, gc.ForbiddenPattern.clique(3)) == (True, None)


def test_bip_matches_direct_arithmetic():
    # re-derive q=3, s=2 both variants with plain field arithmetic
    F = spec_for(3)
    xi = smallest_nonresidue(F)
    pts = geo.enumerate_pg_points(2, F)

    def Q(x, y):
        acc = xi * x[0] * y[0]
        for a, b in zip(x.coords[1:], y.coords[1:]):
            acc = acc + a * b
        return acc

    verts = [p for p in pts if quadratic_character(Q(p, p)) == 1]
    assert len(verts) == geo.bip_graph(3, 2).n == 6
    for variant, rule in (
        ("canonical", lambda v: quadratic_character(v) == 1),
        ("symmetrized", lambda v: not v),
    ):
        edges = [
            (i, j)
            for i in range(len(verts))
            for j in range(i + 1, len(verts))
            if rule(Q(verts[i], verts[j]))
        ]
        assert geo.bip_graph(3, 2, variant) == gc.Graph.from_edges(len(verts), edges)


def test_bip_vertex_points_agree():
    pts = geo.bip_vertex_points(5, 2)
    G = geo.bip_graph(5, 2)
    assert len(pts) == G.n
    F = spec_for(5)
    xi = smallest_nonresidue(F)
    for p in pts:
        val = xi * p[0] * p[0] + p[1] * p[1] + p[2] * p[2]
        assert quadratic_character(val) == 1


def test_bip_rejects():
    with pytest.raises(ValueError):
        geo.bip_graph(4, 2)  # even order
    with pytest.raises(ValueError):
        geo.bip_graph(15, 2)
    with pytest.raises(ValueError):
        geo.bip_graph(17, 2)
    with pytest.raises(ValueError):
        geo.bip_graph(5, 0)
    with pytest.raises(ValueError):
        geo.bip_graph(5, 5)
    with pytest.raises(ValueError):
        geo.bip_graph(5, 2, variant="averaged")
