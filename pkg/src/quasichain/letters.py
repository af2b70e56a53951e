"""General letter graphs and an exact lettericity search for tiny graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .graph import A, B, BipartiteGraph, bits, mask_of

LETTERICITY_MAX_VERTICES = 10


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on ``0..n-1`` stored as neighbourhood bitmasks."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_bipartite(cls, g: BipartiteGraph) -> "SimpleGraph":
        na = g.size_a
        return cls(g.num_vertices, tuple([r << na for r in g.rows] + list(g.cols)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def as_bipartite(self, part_a: Sequence[int]) -> BipartiteGraph:
        """Read as a bipartite graph with ``part_a`` white (in the given order) and the rest black."""
        a_list = list(part_a)
        a_set = set(a_list)
        b_list = [v for v in range(self.n) if v not in a_set]
        b_index = {v: j for j, v in enumerate(b_list)}
        if any(self.adj[u] & mask_of(a_list) for u in a_list):
            raise ValueError("an edge joins two white vertices")
        if any(self.adj[u] & mask_of(b_list) for u in b_list):
            raise ValueError("an edge joins two black vertices")
        rows = tuple(mask_of(b_index[v] for v in bits(self.adj[u])) for u in a_list)
        return BipartiteGraph(len(a_list), len(b_list), rows)


@dataclass(frozen=True)
class LetterDecoder:
    alphabet: frozenset[str]
    pairs: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        stray = {s for p in self.pairs for s in p} - self.alphabet
        if stray:
            raise ValueError(f"decoder pairs use symbols outside the alphabet: {sorted(stray)}")


def decode_letter_graph(d: LetterDecoder, word: Sequence[str]) -> SimpleGraph:
    """Vertex per position; ``i < j`` adjacent iff ``(word[i], word[j])`` is in the decoder."""
    for s in word:
        if s not in d.alphabet:
            raise ValueError(f"symbol {s!r} is not in the alphabet")
    edges = [
        (i, j)
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if (word[i], word[j]) in d.pairs
    ]
    return SimpleGraph.from_edges(len(word), edges)


def letter_graph_as_bipartite(d: LetterDecoder, word: Sequence[str], white: Iterable[str] = ("a",)) -> BipartiteGraph:
    """Decode and read positions with a ``white`` letter as part A."""
    white = set(white)
    return decode_letter_graph(d, word).as_bipartite([i for i, s in enumerate(word) if s in white])


def _orderable(n: int, adj: Sequence[int], letters: Sequence[int], pairs: set[tuple[int, int]]) -> bool:
    # Each pair either fixes which vertex comes first or leaves it free; a word
    # exists iff the forced precedences are acyclic.
    before = [0] * n  # before[v]: vertices that must precede v
    for u in range(n):
        for v in range(u + 1, n):
            e = bool(adj[u] >> v & 1)
            uv = ((letters[u], letters[v]) in pairs) == e
            vu = ((letters[v], letters[u]) in pairs) == e
            if not uv and not vu:
                return False
            if uv and not vu:
                before[v] |= 1 << u
            elif vu and not uv:
                before[u] |= 1 << v
    done = 0
    remaining = (1 << n) - 1
    while remaining:
        ready = [v for v in bits(remaining) if before[v] & ~done == 0]
        if not ready:
            return False
        for v in ready:
            done |= 1 << v
            remaining &= ~(1 << v)
    return True


def is_k_letter_graph(g: SimpleGraph | BipartiteGraph, k: int) -> bool:
    if isinstance(g, BipartiteGraph):
        g = SimpleGraph.from_bipartite(g)
    if g.n > LETTERICITY_MAX_VERTICES:
        from .oracles import OracleBudgetError

        raise OracleBudgetError(f"lettericity search limited to {LETTERICITY_MAX_VERTICES} vertices")
    if g.n == 0:
        return True
    all_pairs = [(x, y) for x in range(k) for y in range(k)]
    decoders = [
        {p for p, keep in zip(all_pairs, choice) if keep}
        for choice in product((False, True), repeat=len(all_pairs))
    ]
    # letter names are interchangeable: vertex 0 takes letter 0 and every new
    # letter is the smallest unused one
    def assignments(i: int, used: int, cur: list[int]):
        if i == g.n:
            yield cur
            return
        for x in range(min(used + 1, k)):
            cur.append(x)
            yield from assignments(i + 1, max(used, x + 1), cur)
            cur.pop()

    for letters in assignments(0, 0, []):
        for pairs in decoders:
            if _orderable(g.n, g.adj, letters, pairs):
                return True
    return False


def lettericity_bruteforce(g: SimpleGraph | BipartiteGraph, kmax: int) -> Optional[int]:
    """Smallest ``k <= kmax`` such that ``g`` is a ``k``-letter graph, else ``None``."""
    if isinstance(g, BipartiteGraph):
        g = SimpleGraph.from_bipartite(g)
    if g.n > LETTERICITY_MAX_VERTICES:
        from .oracles import OracleBudgetError

        raise OracleBudgetError(f"lettericity search limited to {LETTERICITY_MAX_VERTICES} vertices")
    if g.n == 0:
        return 0
    for k in range(1, kmax + 1):
        if is_k_letter_graph(g, k):
            return k
    return None


__all__ = [
    "A",
    "B",
    "LetterDecoder",
    "SimpleGraph",
    "decode_letter_graph",
    "is_k_letter_graph",
    "letter_graph_as_bipartite",
    "lettericity_bruteforce",
]
