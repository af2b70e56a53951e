import pytest

from quasichain import generators
from quasichain.generators import (
    GeneratorSpec,
    SamplingError,
    antichain_q,
    double_chain,
    generate,
    random_quasi_chain,
    universal_chain,
)
from quasichain.graph import A, B, BipartiteGraph, ChainOrdering, VertexRef, find_embedding, induced_subgraph, is_chain_graph
from quasichain.oracles import all_bipartite_graphs
from quasichain.recognition import quasi_chain
from support import D3, Q6, TWO_P2, Z6


def test_families_match_reference_graphs():
    assert universal_chain(6) == Z6
    assert antichain_q(6) == Q6
    assert double_chain(3) == D3
    assert double_chain(3).num_vertices == 12


def test_smallest_members():
    assert universal_chain(1) == BipartiteGraph.complete(1, 1)
    assert double_chain(1) == TWO_P2
    assert antichain_q(2).num_vertices == 6
    for bad in (lambda: universal_chain(0), lambda: antichain_q(1), lambda: double_chain(0)):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("n", range(2, 9))
def test_families_are_quasi_chain(n):
    assert quasi_chain(universal_chain(n))
    assert quasi_chain(antichain_q(n))
    assert quasi_chain(double_chain(n))
    assert antichain_q(n).num_vertices == 2 * n + 2
    assert double_chain(n).num_vertices == 4 * n


@pytest.mark.parametrize("n", range(1, 6))
def test_double_chain_rungs(n):
    g = double_chain(n)
    for k in range(n):
        rung = [VertexRef(A, 2 * k), VertexRef(A, 2 * k + 1), VertexRef(B, 2 * k), VertexRef(B, 2 * k + 1)]
        assert induced_subgraph(g, rung).graph == TWO_P2


def test_antichain_pairwise():
    for m in range(4, 7):
        for n in range(m + 1, 7):
            assert find_embedding(antichain_q(m), antichain_q(n), colored=False) is None


def test_universal_chain_small_scale():
    z4 = universal_chain(4)
    count = 0
    for total in range(1, 5):
        for na in range(total + 1):
            for g in all_bipartite_graphs(na, total - na):
                if not isinstance(is_chain_graph(g), ChainOrdering):
                    continue
                count += 1
                assert find_embedding(g, z4) is not None or find_embedding(g.transpose(), z4) is not None
    assert count > 20


def test_random_chain_when_unmarked():
    for seed in range(30):
        g = random_quasi_chain(GeneratorSpec("random", 25, seed, 0.0))
        assert isinstance(is_chain_graph(g), ChainOrdering)


def test_seed_determinism():
    spec = GeneratorSpec("random", 40, 12345, 0.3)
    assert generate(spec) == generate(spec)
    assert random_quasi_chain(40, 12345, 0.3).to_json() == generate(spec).to_json()
    assert random_quasi_chain(40, 1, 0.3) != random_quasi_chain(40, 2, 0.3)


def test_random_samples_pass_recognition():
    for seed in range(1000):
        g = random_quasi_chain(GeneratorSpec("random", 30, seed, 0.3))
        assert g.num_vertices == 30
        assert quasi_chain(g)


def test_spec_validation():
    for kwargs in (
        {"family": "xn", "n": 3},
        {"family": "zn", "n": 0},
        {"family": "random", "n": 3, "mark_density": 1.5},
        {"family": "random", "n": 3, "seed": -1},
        {"family": "random", "n": 3, "seed": 2**64},
    ):
        with pytest.raises(ValueError):
            GeneratorSpec(**kwargs)
    assert generate(GeneratorSpec("qn", 6)) == Q6


def test_sampling_budget(monkeypatch):
    monkeypatch.setattr(generators, "quasi_chain", lambda g: False)
    with pytest.raises(SamplingError):
        random_quasi_chain(5, 0, 0.5)
