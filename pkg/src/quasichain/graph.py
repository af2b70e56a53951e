"""Two-coloured bipartite graphs stored as per-vertex bitsets.

A graph has white vertices ``A = 0..size_a-1`` and black vertices
``B = 0..size_b-1``.  ``rows[i]`` is the bitmask of B-neighbours of ``a_i``;
the B-side view is derived on demand and cached.  Graphs are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

A = "A"
B = "B"


class VertexRef(NamedTuple):
    side: str
    index: int

    def __repr__(self) -> str:
        return f"{self.side.lower()}{self.index}"


def other(side: str) -> str:
    if side == A:
        return B
    if side == B:
        return A
    raise ValueError(f"unknown side {side!r}")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class BipartiteGraph:
    size_a: int
    size_b: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size_a < 0 or self.size_b < 0:
            raise ValueError("part sizes must be non-negative")
        if len(self.rows) != self.size_a:
            raise ValueError(f"expected {self.size_a} rows, got {len(self.rows)}")
        full = (1 << self.size_b) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise ValueError("row mask references a vertex outside part B")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls, size_a: int, size_b: int, edges: Iterable[Sequence[int]], *, strict: bool = False
    ) -> "BipartiteGraph":
        """Build a graph from ``(a, b)`` pairs; ``strict`` rejects duplicates."""
        rows = [0] * size_a
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if not (0 <= a < size_a and 0 <= b < size_b):
                raise ValueError(f"edge {(a, b)} out of range for parts {size_a},{size_b}")
            if strict and rows[a] >> b & 1:
                raise ValueError(f"duplicate edge {(a, b)}")
            rows[a] |= 1 << b
        return cls(size_a, size_b, tuple(rows))

    @classmethod
    def empty(cls, size_a: int, size_b: int) -> "BipartiteGraph":
        return cls(size_a, size_b, (0,) * size_a)

    @classmethod
    def complete(cls, size_a: int, size_b: int) -> "BipartiteGraph":
        return cls(size_a, size_b, ((1 << size_b) - 1,) * size_a)

    # views ----------------------------------------------------------------

    @cached_property
    def cols(self) -> tuple[int, ...]:
        cols = [0] * self.size_b
        for a, r in enumerate(self.rows):
            for b in bits(r):
                cols[b] |= 1 << a
        return tuple(cols)

    @property
    def num_vertices(self) -> int:
        return self.size_a + self.size_b

    @cached_property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def size(self, side: str) -> int:
        return self.size_a if side == A else self.size_b

    def side_masks(self, side: str) -> tuple[int, ...]:
        """Neighbourhood masks of every vertex of ``side``."""
        return self.rows if side == A else self.cols

    def neighbors(self, v: VertexRef) -> int:
        self.check_ref(v)
        return self.side_masks(v.side)[v.index]

    def degree(self, v: VertexRef) -> int:
        return self.neighbors(v).bit_count()

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def adjacent(self, u: VertexRef, v: VertexRef) -> bool:
        if u.side == v.side:
            return False
        a, b = (u, v) if u.side == A else (v, u)
        return self.has_edge(a.index, b.index)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, r in enumerate(self.rows) for b in bits(r)]

    def vertices(self) -> list[VertexRef]:
        return [VertexRef(A, i) for i in range(self.size_a)] + [
            VertexRef(B, j) for j in range(self.size_b)
        ]

    def check_ref(self, v: VertexRef) -> None:
        if v.side not in (A, B) or not 0 <= v.index < self.size(v.side):
            raise ValueError(f"invalid vertex reference {v!r}")

    def max_degree(self) -> int:
        degs = [r.bit_count() for r in self.rows] + [c.bit_count() for c in self.cols]
        return max(degs, default=0)

    def is_connected(self) -> bool:
        n = self.num_vertices
        if n == 0:
            return True
        seen_a, seen_b = (1, 0) if self.size_a else (0, 1)
        frontier_a, frontier_b = seen_a, seen_b
        while frontier_a or frontier_b:
            new_b = 0
            for a in bits(frontier_a):
                new_b |= self.rows[a]
            new_a = 0
            for b in bits(frontier_b):
                new_a |= self.cols[b]
            frontier_a, frontier_b = new_a & ~seen_a, new_b & ~seen_b
            seen_a |= frontier_a
            seen_b |= frontier_b
        return seen_a.bit_count() + seen_b.bit_count() == n

    def transpose(self) -> "BipartiteGraph":
        """Swap the two colour classes (reflection)."""
        return BipartiteGraph(self.size_b, self.size_a, self.cols)

    def relabel(self, perm_a: Sequence[int], perm_b: Sequence[int]) -> "BipartiteGraph":
        """Return the graph in which old ``a_i`` becomes ``a_{perm_a[i]}`` (same for B)."""
        rows = [0] * self.size_a
        for a, r in enumerate(self.rows):
            rows[perm_a[a]] = mask_of(perm_b[b] for b in bits(r))
        return BipartiteGraph(self.size_a, self.size_b, tuple(rows))

    # serialisation ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {"a": self.size_a, "b": self.size_b, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BipartiteGraph":
        try:
            size_a, size_b, edges = data["a"], data["b"], data["edges"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph object: {exc}") from exc
        if not isinstance(size_a, int) or not isinstance(size_b, int):
            raise ValueError("part sizes must be integers")
        for e in edges:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise ValueError(f"malformed edge {e!r}")
        return cls.from_edges(size_a, size_b, edges, strict=True)

    @classmethod
    def from_json(cls, text: str) -> "BipartiteGraph":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"BipartiteGraph({self.size_a}, {self.size_b}, edges={self.edges()})"


# set algebra ------------------------------------------------------------------


def bipartite_complement(g: BipartiteGraph) -> BipartiteGraph:
    full = (1 << g.size_b) - 1
    return BipartiteGraph(g.size_a, g.size_b, tuple(full & ~r for r in g.rows))


def symmetric_difference(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    if (g1.size_a, g1.size_b) != (g2.size_a, g2.size_b):
        raise ValueError(
            f"part sizes differ: ({g1.size_a},{g1.size_b}) vs ({g2.size_a},{g2.size_b})"
        )
    return BipartiteGraph(g1.size_a, g1.size_b, tuple(x ^ y for x, y in zip(g1.rows, g2.rows)))


class Subgraph(NamedTuple):
    graph: BipartiteGraph
    a_map: tuple[int, ...]  # new A index -> original A index
    b_map: tuple[int, ...]


def induced_subgraph(g: BipartiteGraph, vertices: Iterable[VertexRef]) -> Subgraph:
    """Subgraph induced by ``vertices``; kept vertices retain their relative order."""
    keep_a: set[int] = set()
    keep_b: set[int] = set()
    for v in vertices:
        g.check_ref(v)
        (keep_a if v.side == A else keep_b).add(v.index)
    a_map = tuple(sorted(keep_a))
    b_map = tuple(sorted(keep_b))
    rows = []
    for a in a_map:
        r = g.rows[a]
        rows.append(mask_of(j for j, b in enumerate(b_map) if r >> b & 1))
    return Subgraph(BipartiteGraph(len(a_map), len(b_map), tuple(rows)), a_map, b_map)


def edge_graph(size_a: int, size_b: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    return BipartiteGraph.from_edges(size_a, size_b, edges)


def is_matching(edges: Iterable[tuple[int, int]]) -> bool:
    seen_a: set[int] = set()
    seen_b: set[int] = set()
    for a, b in edges:
        if a in seen_a or b in seen_b:
            return False
        seen_a.add(a)
        seen_b.add(b)
    return True


# chain graphs -------------------------------------------------------------------


class ChainOrdering(NamedTuple):
    order_a: tuple[int, ...]  # non-increasing neighbourhoods
    order_b: tuple[int, ...]  # non-decreasing neighbourhoods


class TwoP2(NamedTuple):
    """Edges ``a1-b1`` and ``a2-b2`` with ``a1-b2`` and ``a2-b1`` absent."""

    edge1: tuple[int, int]
    edge2: tuple[int, int]


def degree_order(masks: Sequence[int], *, descending: bool = True) -> tuple[int, ...]:
    sign = -1 if descending else 1
    return tuple(sorted(range(len(masks)), key=lambda i: (sign * masks[i].bit_count(), i)))


def is_chain_graph(g: BipartiteGraph) -> ChainOrdering | TwoP2:
    order_a = degree_order(g.rows)
    for u, v in zip(order_a, order_a[1:]):
        nu, nv = g.rows[u], g.rows[v]
        if nv & ~nu:
            # deg(u) >= deg(v) and N(v) is not inside N(u): both sides have a private neighbour
            b1 = next(bits(nu & ~nv))
            b2 = next(bits(nv & ~nu))
            return TwoP2((u, b1), (v, b2))
    return ChainOrdering(order_a, degree_order(g.cols, descending=False))


# induced embeddings (exponential oracle) -------------------------------------------

EMBEDDING_MAX_VERTICES = 40


def _flat(g: BipartiteGraph) -> tuple[list[int], int]:
    """Adjacency masks over the flat vertex set ``A`` then ``B`` and the A-part mask."""
    na = g.size_a
    adj = [r << na for r in g.rows] + list(g.cols)
    return adj, (1 << na) - 1


def find_embedding(
    h: BipartiteGraph, g: BipartiteGraph, colored: bool = True
) -> Optional[dict[VertexRef, VertexRef]]:
    """Find an induced embedding of ``h`` into ``g`` by backtracking.

    In coloured mode white maps to white and black to black.  Uncoloured mode
    treats both graphs as plain graphs, so every component may land with
    either orientation (this subsumes trying the global part swap).
    Returns the vertex map or ``None``.
    """
    if g.num_vertices > EMBEDDING_MAX_VERTICES:
        from .oracles import OracleBudgetError

        raise OracleBudgetError(
            f"embedding search limited to {EMBEDDING_MAX_VERTICES} host vertices, got {g.num_vertices}"
        )
    if h.num_vertices > g.num_vertices:
        return None
    if colored and (h.size_a > g.size_a or h.size_b > g.size_b):
        return None
    hadj, h_amask = _flat(h)
    gadj, g_amask = _flat(g)
    nh, ng = h.num_vertices, g.num_vertices
    g_all = (1 << ng) - 1
    hdeg = [m.bit_count() for m in hadj]
    gdeg = [m.bit_count() for m in gadj]

    # place vertices so each (when possible) touches an already placed one
    order: list[int] = []
    placed = 0
    remaining = set(range(nh))
    while remaining:
        touching = [v for v in remaining if hadj[v] & placed]
        pool = touching or list(remaining)
        v = max(pool, key=lambda x: (hdeg[x], (hadj[x] & placed).bit_count(), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    base: list[int] = []
    for v in range(nh):
        if colored:
            side = g_amask if h_amask >> v & 1 else g_all & ~g_amask
        else:
            side = g_all
        cand = 0
        for x in bits(side):
            if gdeg[x] >= hdeg[v]:
                cand |= 1 << x
        base.append(cand)

    image = [-1] * nh

    def extend(k: int, used: int) -> bool:
        if k == nh:
            return True
        v = order[k]
        cand = base[v] & ~used
        for u in order[:k]:
            cand &= gadj[image[u]] if hadj[v] >> u & 1 else ~gadj[image[u]]
            if not cand:
                return False
        for x in bits(cand):
            image[v] = x
            if extend(k + 1, used | 1 << x):
                return True
        image[v] = -1
        return False

    if not extend(0, 0):
        return None

    def ref(flat: int, na: int) -> VertexRef:
        return VertexRef(A, flat) if flat < na else VertexRef(B, flat - na)

    return {ref(v, h.size_a): ref(image[v], g.size_a) for v in range(nh)}
