import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasichain.graph import (
    A,
    B,
    BipartiteGraph,
    ChainOrdering,
    TwoP2,
    VertexRef,
    bipartite_complement,
    find_embedding,
    induced_subgraph,
    is_chain_graph,
    is_matching,
    symmetric_difference,
)
from quasichain.generators import antichain_q
from quasichain.oracles import OracleBudgetError, all_bipartite_graphs
from quasichain.permutations import qp_graph
from support import AABABBAB, Q6, TWO_P2, Z6, bipartite_graphs, random_bipartite


def test_construction_and_views():
    g = BipartiteGraph.from_edges(2, 3, [(0, 2), (1, 0), (1, 2)])
    assert g.rows == (0b100, 0b101)
    assert g.cols == (0b10, 0, 0b11)
    assert g.num_edges == 3
    assert g.degree(VertexRef(B, 2)) == 2
    assert g.adjacent(VertexRef(A, 1), VertexRef(B, 0))
    assert not g.adjacent(VertexRef(A, 0), VertexRef(A, 1))
    assert g.edges() == [(0, 2), (1, 0), (1, 2)]


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        BipartiteGraph.from_edges(2, 2, [(0, 2)])
    with pytest.raises(ValueError):
        BipartiteGraph(1, 1, (0b10,))
    with pytest.raises(ValueError):
        BipartiteGraph.from_json('{"a": 2, "b": 2, "edges": [[0, 1], [0, 1]]}')
    with pytest.raises(ValueError):
        BipartiteGraph.from_json('{"a": 2, "edges": []}')
    with pytest.raises(ValueError):
        AABABBAB.check_ref(VertexRef(A, 4))


def test_json_is_canonical():
    g = BipartiteGraph.from_edges(2, 2, [(1, 0), (0, 1)])
    assert g.to_json() == '{"a": 2, "b": 2, "edges": [[0, 1], [1, 0]]}'
    assert BipartiteGraph.from_json(g.to_json()) == g
    assert json.loads(AABABBAB.to_json())["edges"] == sorted(json.loads(AABABBAB.to_json())["edges"])


def test_empty_parts_are_legal():
    g = BipartiteGraph.empty(0, 3)
    assert g.num_vertices == 3 and g.num_edges == 0
    assert bipartite_complement(g) == g
    assert isinstance(is_chain_graph(g), ChainOrdering)


# complement ------------------------------------------------------------------------


def test_complement_examples():
    assert bipartite_complement(BipartiteGraph.complete(2, 2)) == BipartiteGraph.empty(2, 2)
    assert bipartite_complement(BipartiteGraph.empty(2, 2)) == BipartiteGraph.complete(2, 2)
    # aababbab: positions of a are 1,2,4,7 and of b are 3,5,6,8; the complement
    # joins each a to the b's before it
    a_pos, b_pos = [1, 2, 4, 7], [3, 5, 6, 8]
    expected = {(i, j) for i, p in enumerate(a_pos) for j, q in enumerate(b_pos) if q < p}
    assert set(bipartite_complement(AABABBAB).edges()) == expected


@given(bipartite_graphs())
def test_complement_involution(g):
    assert bipartite_complement(bipartite_complement(g)) == g
    assert g.num_edges + bipartite_complement(g).num_edges == g.size_a * g.size_b


# symmetric difference ----------------------------------------------------------------


def test_symmetric_difference_examples():
    assert symmetric_difference(AABABBAB, AABABBAB) == BipartiteGraph.empty(4, 4)
    assert symmetric_difference(AABABBAB, BipartiteGraph.empty(4, 4)) == AABABBAB
    with pytest.raises(ValueError):
        symmetric_difference(AABABBAB, BipartiteGraph.empty(4, 3))


def test_symmetric_difference_builds_marked_word_graph():
    h = BipartiteGraph.from_edges(4, 4, [(0, 0), (3, 1)])  # a1b1 removed, b2a4 added
    g = symmetric_difference(AABABBAB, h)
    assert not g.has_edge(0, 0) and g.has_edge(3, 1)
    assert g.num_edges == AABABBAB.num_edges


@settings(max_examples=60)
@given(st.data())
def test_symmetric_difference_laws(data):
    na = data.draw(st.integers(0, 5))
    nb = data.draw(st.integers(0, 5))
    rows = st.tuples(*[st.integers(0, (1 << nb) - 1)] * na)
    g1, g2, g3 = (BipartiteGraph(na, nb, data.draw(rows)) for _ in range(3))
    assert symmetric_difference(g1, g2) == symmetric_difference(g2, g1)
    assert symmetric_difference(symmetric_difference(g1, g2), g3) == symmetric_difference(
        g1, symmetric_difference(g2, g3)
    )


# induced subgraphs ----------------------------------------------------------------------


def test_induced_subgraph_examples():
    assert induced_subgraph(AABABBAB, AABABBAB.vertices()).graph == AABABBAB
    k22 = BipartiteGraph.complete(2, 2)
    sub = induced_subgraph(k22, [VertexRef(A, 1), VertexRef(B, 0)])
    assert sub.graph == BipartiteGraph.complete(1, 1)
    assert sub.a_map == (1,) and sub.b_map == (0,)
    with pytest.raises(ValueError):
        induced_subgraph(k22, [VertexRef(A, 2)])


def test_induced_subgraph_of_q6():
    verts = [VertexRef(A, i) for i in range(4)] + [VertexRef(B, j) for j in range(4)]
    sub = induced_subgraph(Q6, verts).graph
    # a_i b_j with i <= j and j != i + 1, restricted to indices 1..4
    expected = {(i, j) for i in range(4) for j in range(4) if i <= j and j != i + 1}
    assert set(sub.edges()) == expected


@settings(max_examples=60)
@given(bipartite_graphs(), st.data())
def test_induced_subgraph_nesting(g, data):
    verts = g.vertices()
    outer = data.draw(st.sets(st.sampled_from(verts))) if verts else set()
    inner = data.draw(st.sets(st.sampled_from(sorted(outer)))) if outer else set()
    first = induced_subgraph(g, outer)
    # express ``inner`` in the coordinates of ``first``
    pos_a = {old: new for new, old in enumerate(first.a_map)}
    pos_b = {old: new for new, old in enumerate(first.b_map)}
    inner_local = [VertexRef(v.side, (pos_a if v.side == A else pos_b)[v.index]) for v in inner]
    assert induced_subgraph(first.graph, inner_local).graph == induced_subgraph(g, inner).graph


# chain graphs ------------------------------------------------------------------------------


def test_chain_examples():
    res = is_chain_graph(Z6)
    assert isinstance(res, ChainOrdering)
    assert res.order_a == tuple(range(6)) and res.order_b == tuple(range(6))
    w = is_chain_graph(TWO_P2)
    assert isinstance(w, TwoP2)
    assert {w.edge1, w.edge2} == {(0, 0), (1, 1)}
    assert isinstance(is_chain_graph(BipartiteGraph.empty(3, 3)), ChainOrdering)


def _check_chain_ordering(g, res):
    for u, v in zip(res.order_a, res.order_a[1:]):
        assert g.rows[v] & ~g.rows[u] == 0
    for u, v in zip(res.order_b, res.order_b[1:]):
        assert g.cols[u] & ~g.cols[v] == 0


def test_chain_matches_2p2_embedding_exhaustive():
    swapped = TWO_P2.transpose()
    for total in range(1, 9):
        for na in range(total + 1):
            nb = total - na
            if na * nb > 16:
                continue
            for g in all_bipartite_graphs(na, nb):
                res = is_chain_graph(g)
                free = find_embedding(TWO_P2, g) is None and find_embedding(swapped, g) is None
                assert isinstance(res, ChainOrdering) == free
                if isinstance(res, ChainOrdering):
                    _check_chain_ordering(g, res)
                else:
                    (a1, b1), (a2, b2) = res
                    assert g.has_edge(a1, b1) and g.has_edge(a2, b2)
                    assert not g.has_edge(a1, b2) and not g.has_edge(a2, b1)


# embeddings ----------------------------------------------------------------------------------


def _check_embedding(h, g, emb, colored):
    assert len(set(emb.values())) == len(emb) == h.num_vertices
    for u in h.vertices():
        if colored:
            assert emb[u].side == u.side
        for v in h.vertices():
            assert h.adjacent(u, v) == g.adjacent(emb[u], emb[v]) if u.side != v.side else True
    if not colored:
        for u in h.vertices():
            for v in h.vertices():
                if u.side == v.side:
                    assert not g.adjacent(emb[u], emb[v])


def test_embedding_examples():
    emb = find_embedding(AABABBAB, AABABBAB)
    _check_embedding(AABABBAB, AABABBAB, emb, True)
    h, g = qp_graph((2, 1)), qp_graph((1, 2, 3, 4))
    _check_embedding(h, g, find_embedding(h, g), True)
    assert find_embedding(antichain_q(4), antichain_q(5), colored=False) is None


def test_embedding_respects_colours():
    star = BipartiteGraph.complete(1, 2)
    assert find_embedding(star, star.transpose()) is None
    emb = find_embedding(star, star.transpose(), colored=False)
    assert emb is not None
    assert find_embedding(BipartiteGraph.empty(3, 0), BipartiteGraph.empty(2, 1)) is None
    assert find_embedding(BipartiteGraph.empty(3, 0), BipartiteGraph.empty(2, 1), colored=False) is not None


def test_embedding_budget():
    big = BipartiteGraph.empty(21, 20)
    with pytest.raises(OracleBudgetError):
        find_embedding(BipartiteGraph.empty(1, 1), big)


def test_embedding_against_subset_search():
    rng = np.random.default_rng(7)
    from itertools import combinations, permutations

    for _ in range(40):
        g = random_bipartite(rng, 3, 3, 0.5)
        h = random_bipartite(rng, 2, 2, 0.5)
        brute = any(
            all(g.has_edge(sa[i], sb[j]) == h.has_edge(i, j) for i in range(2) for j in range(2))
            for ca in combinations(range(3), 2)
            for cb in combinations(range(3), 2)
            for sa in permutations(ca)
            for sb in permutations(cb)
        )
        assert (find_embedding(h, g) is not None) == brute


def test_is_matching():
    assert is_matching([(0, 1), (1, 0)])
    assert not is_matching([(0, 1), (0, 2)])
    assert not is_matching([(0, 1), (2, 1)])
