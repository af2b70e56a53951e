"""Shared graphs and strategies for the test suite."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from quasichain.graph import BipartiteGraph
from quasichain.words import EnhancedWord

# Edge sets are written with 1-based vertex names.


def from_named(size_a: int, size_b: int, edges) -> BipartiteGraph:
    return BipartiteGraph.from_edges(size_a, size_b, [(i - 1, j - 1) for i, j in edges])


# graph of the word aababbab: a1, a2 see every b; a3 sees b2..b4; a4 sees b4
AABABBAB_EDGES = [
    (1, 1), (1, 2), (1, 3), (1, 4),
    (2, 1), (2, 2), (2, 3), (2, 4),
    (3, 2), (3, 3), (3, 4),
    (4, 4),
]
AABABBAB = from_named(4, 4, AABABBAB_EDGES)

Z6 = from_named(6, 6, [(i, j) for i in range(1, 7) for j in range(i, 7)])

# Q6: verticals a_i b_i, a_i b_{x+2} for 1 <= i <= x <= 4, plus a'6 b6 and a1 b'1;
# a'6 is A-vertex 7 and b'1 is B-vertex 7
Q6 = from_named(
    7,
    7,
    [(i, i) for i in range(1, 7)]
    + [(i, x + 2) for i in range(1, 5) for x in range(i, 5)]
    + [(7, 6), (1, 7)],
)

# D3 on kept indices 1, 2, 4, 5, 7, 8 (renumbered 1..6 in order)
_D3_IDX = {1: 1, 2: 2, 4: 3, 5: 4, 7: 5, 8: 6}
D3 = from_named(
    6,
    6,
    [(_D3_IDX[i], _D3_IDX[i]) for i in (1, 2, 4, 5, 7, 8)]
    + [(_D3_IDX[i], _D3_IDX[x]) for i in (1, 2) for x in (4, 5, 7, 8)]
    + [(_D3_IDX[i], _D3_IDX[x]) for i in (4, 5) for x in (7, 8)],
)

# centres a1, a2; a1 sees b1, b2 and a2 sees b3, b4
UNBALANCED_2P3 = BipartiteGraph.from_edges(2, 4, [(0, 0), (0, 1), (1, 2), (1, 3)])
TWO_P2 = BipartiteGraph.from_edges(2, 2, [(0, 0), (1, 1)])
K44_MINUS_PM = BipartiteGraph.from_edges(4, 4, [(i, j) for i in range(4) for j in range(4) if i != j])


def random_bipartite(rng: np.random.Generator, size_a: int, size_b: int, p: float) -> BipartiteGraph:
    m = rng.random((size_a, size_b)) < p
    rows = tuple(sum(1 << j for j in range(size_b) if m[i, j]) for i in range(size_a))
    return BipartiteGraph(size_a, size_b, rows)


@st.composite
def bipartite_graphs(draw, max_part: int = 6):
    na = draw(st.integers(0, max_part))
    nb = draw(st.integers(0, max_part))
    rows = tuple(draw(st.integers(0, (1 << nb) - 1)) for _ in range(na))
    return BipartiteGraph(na, nb, rows)


@st.composite
def enhanced_words(draw, max_len: int = 14):
    word = draw(st.text(alphabet="ab", min_size=0, max_size=max_len))
    n = len(word)

    def matching(first: str, second: str):
        used: set[int] = set()
        marks = []
        for p in range(1, n + 1):
            if word[p - 1] != first or p in used or not draw(st.booleans()):
                continue
            cands = [q for q in range(p + 1, n + 1) if word[q - 1] == second and q not in used]
            if cands:
                q = draw(st.sampled_from(cands))
                used.update((p, q))
                marks.append((p, q))
        return frozenset(marks)

    top = matching("b", "a")
    bottom = matching("a", "b")
    return EnhancedWord(word, top, bottom)
