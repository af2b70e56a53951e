"""Exponential reference implementations used as ground truth in tests.

Every oracle checks its input size against a hard cap before searching and
raises :class:`OracleBudgetError` when it is exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Optional

from .graph import A, B, BipartiteGraph, VertexRef, bits, mask_of


class OracleBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int
    max_part: Optional[int] = None

    def check(self, g: BipartiteGraph, name: str) -> None:
        if g.num_vertices > self.max_vertices:
            raise OracleBudgetError(
                f"{name}: {g.num_vertices} vertices exceeds the cap of {self.max_vertices}"
            )
        if self.max_part is not None and max(g.size_a, g.size_b) > self.max_part:
            raise OracleBudgetError(
                f"{name}: parts ({g.size_a}, {g.size_b}) exceed the cap of {self.max_part}"
            )


QUASI_CHAIN_BUDGET = OracleBudget(40)
SUBSET_QUASI_CHAIN_BUDGET = OracleBudget(14)
BICLIQUE_BUDGET = OracleBudget(24, max_part=12)
DOMINATING_BUDGET = OracleBudget(22)
INDEPENDENT_SETS_BUDGET = OracleBudget(16)


def _flat(g: BipartiteGraph) -> list[int]:
    na = g.size_a
    return [r << na for r in g.rows] + list(g.cols)


def _ref(g: BipartiteGraph, flat: int) -> VertexRef:
    return VertexRef(A, flat) if flat < g.size_a else VertexRef(B, flat - g.size_a)


def _refs(g: BipartiteGraph, mask: int) -> frozenset[VertexRef]:
    return frozenset(_ref(g, v) for v in bits(mask))


# quasi-chain ------------------------------------------------------------------------


def brute_quasi_chain(g: BipartiteGraph) -> bool:
    """No two same-side vertices each have two neighbours the other lacks.

    Such a pair plus two private neighbours of each is exactly an induced
    unbalanced 2P3 (same-side vertices are never adjacent), so this is the
    forbidden-subgraph definition read off directly, with both sides tried.
    """
    QUASI_CHAIN_BUDGET.check(g, "brute_quasi_chain")
    for masks in (g.rows, g.cols):
        for u, v in combinations(masks, 2):
            if (u & ~v).bit_count() >= 2 and (v & ~u).bit_count() >= 2:
                return False
    return True


def brute_quasi_chain_subsets(g: BipartiteGraph) -> bool:
    """Literal check of every 2 + 4 vertex subset for an induced unbalanced 2P3."""
    SUBSET_QUASI_CHAIN_BUDGET.check(g, "brute_quasi_chain_subsets")
    for centers, leaves in ((g.rows, g.size_b), (g.cols, g.size_a)):
        for u, v in combinations(range(len(centers)), 2):
            for quad in combinations(range(leaves), 4):
                for pair in combinations(quad, 2):
                    rest = [x for x in quad if x not in pair]
                    own_u, own_v = mask_of(pair), mask_of(rest)
                    if (
                        centers[u] & (own_u | own_v) == own_u
                        and centers[v] & (own_u | own_v) == own_v
                    ):
                        return False
    return True


# bicliques ----------------------------------------------------------------------------


def brute_biclique(g: BipartiteGraph, objective: str = "edges"):
    """Exact optimum over all bicliques by enumerating subsets of the smaller part.

    ``objective`` is ``"edges"`` (maximise ``|S| * |T|``) or ``"balanced"``
    (maximise ``p`` with ``|S| = |T| = p``).
    """
    from .optimize import BicliqueSolution

    if objective not in ("edges", "balanced"):
        raise ValueError(f"unknown objective {objective!r}")
    BICLIQUE_BUDGET.check(g, "brute_biclique")
    swap = g.size_a > g.size_b
    small, large = (g.cols, g.size_a) if swap else (g.rows, g.size_b)
    full = (1 << large) - 1
    best_val, best = 0, (0, 0)
    for s in range(1, 1 << len(small)):
        common = full
        for i in bits(s):
            common &= small[i]
        ns, nt = s.bit_count(), common.bit_count()
        if objective == "edges":
            val = ns * nt
            sol = (s, common)
        else:
            val = min(ns, nt)
            sol = (mask_of(list(bits(s))[:val]), mask_of(list(bits(common))[:val]))
        if val > best_val:
            best_val, best = val, sol
    side_small = frozenset(bits(best[0]))
    side_large = frozenset(bits(best[1]))
    if swap:
        side_small, side_large = side_large, side_small
    return BicliqueSolution(side_small, side_large)


# independent sets ------------------------------------------------------------------------


def independent_set_masks(g: BipartiteGraph) -> list[int]:
    """All independent sets as masks over the flat vertex order (A then B)."""
    INDEPENDENT_SETS_BUDGET.check(g, "brute_independent_sets")
    adj = _flat(g)
    n = len(adj)
    out: list[int] = []

    def grow(v: int, cur: int, banned: int) -> None:
        if v == n:
            out.append(cur)
            return
        grow(v + 1, cur, banned)
        if not banned >> v & 1:
            grow(v + 1, cur | 1 << v, banned | adj[v])

    grow(0, 0, 0)
    return out


def brute_independent_sets(g: BipartiteGraph) -> list[frozenset[VertexRef]]:
    return [_refs(g, m) for m in independent_set_masks(g)]


def is_independent_dominating(g: BipartiteGraph, vertices) -> bool:
    """True iff ``vertices`` is independent and dominating (that is, maximal independent)."""
    adj = _flat(g)
    m = mask_of(v.index if v.side == A else g.size_a + v.index for v in vertices)
    dominated = m
    for v in bits(m):
        if adj[v] & m:
            return False
        dominated |= adj[v]
    return dominated == (1 << len(adj)) - 1


def brute_independent_dominating(g: BipartiteGraph) -> frozenset[VertexRef]:
    """A minimum maximal independent set, by branching on an undominated vertex.

    Some vertex of the closed neighbourhood of any undominated vertex must be
    chosen, and only undominated vertices may still be chosen.  Ties go to
    the first set found, so the result is deterministic.
    """
    DOMINATING_BUDGET.check(g, "brute_independent_dominating")
    adj = _flat(g)
    n = len(adj)
    full = (1 << n) - 1
    best = [full, n + 1]

    def search(chosen: int, dominated: int, size: int) -> None:
        if size >= best[1]:
            return
        if dominated == full:
            best[0], best[1] = chosen, size
            return
        v = next(bits(full & ~dominated))
        for u in bits((adj[v] | 1 << v) & ~dominated):
            search(chosen | 1 << u, dominated | adj[u] | 1 << u, size + 1)

    search(0, 0, 0)
    return _refs(g, best[0])


def min_independent_dominating_size(g: BipartiteGraph) -> int:
    """Second oracle: the smallest maximal set among all independent sets."""
    adj = _flat(g)
    full = (1 << len(adj)) - 1
    best = len(adj)
    for m in independent_set_masks(g):
        dom = m
        for v in bits(m):
            dom |= adj[v]
        if dom == full:
            best = min(best, m.bit_count())
    return best


# exhaustive catalogues --------------------------------------------------------------------


def _row_compatible(x: int, y: int) -> bool:
    return (x & ~y).bit_count() <= 1 or (y & ~x).bit_count() <= 1


def _column_tables(cols: int) -> list[list[int]]:
    tables = []
    for perm in permutations(range(cols)):
        tables.append([mask_of(perm[j] for j in bits(m)) for m in range(1 << cols)])
    return tables


def _classes(rows: int, cols: int, quasi_chain_only: bool) -> Iterator[tuple[int, ...]]:
    """Colour-preserving isomorphism classes with ``rows >= cols``, as sorted row tuples."""
    tables = _column_tables(cols)
    values = range(1 << cols)
    seen: set[tuple[int, ...]] = set()

    def canon(rs: list[int]) -> tuple[int, ...]:
        return min(tuple(sorted(t[r] for r in rs)) for t in tables)

    def grow(cur: list[int], start: int) -> Iterator[tuple[int, ...]]:
        if len(cur) == rows:
            if quasi_chain_only:
                colmasks = [mask_of(i for i, r in enumerate(cur) if r >> j & 1) for j in range(cols)]
                if not all(_row_compatible(x, y) for x, y in combinations(colmasks, 2)):
                    return
            key = canon(cur)
            if key not in seen:
                seen.add(key)
                yield key
            return
        for r in values[start:]:
            if quasi_chain_only and not all(_row_compatible(r, x) for x in cur):
                continue
            cur.append(r)
            yield from grow(cur, r)
            cur.pop()

    yield from grow([], 0)


def graph_catalog(
    max_vertices: int,
    *,
    quasi_chain_only: bool = True,
    connected_only: bool = False,
    min_vertices: int = 1,
) -> Iterator[BipartiteGraph]:
    """One representative of every coloured isomorphism class up to ``max_vertices``.

    Classes are distinct under isomorphisms that keep each part in place, so
    a graph and its part swap both appear when they differ.
    """
    for total in range(min_vertices, max_vertices + 1):
        for size_a in range(total + 1):
            size_b = total - size_a
            if size_a >= size_b:
                for key in _classes(size_a, size_b, quasi_chain_only):
                    g = BipartiteGraph(size_a, size_b, key)
                    if not connected_only or g.is_connected():
                        yield g
            else:
                for key in _classes(size_b, size_a, quasi_chain_only):
                    g = BipartiteGraph(size_b, size_a, key).transpose()
                    if not connected_only or g.is_connected():
                        yield g


def all_bipartite_graphs(size_a: int, size_b: int) -> Iterator[BipartiteGraph]:
    """Every labelled graph with the given parts (``2^(size_a*size_b)`` of them)."""
    full = 1 << size_b
    total = full**size_a
    for code in range(total):
        rows = []
        for _ in range(size_a):
            code, r = divmod(code, full)
            rows.append(r)
        yield BipartiteGraph(size_a, size_b, tuple(rows))


__all__ = [
    "OracleBudget",
    "OracleBudgetError",
    "all_bipartite_graphs",
    "brute_biclique",
    "brute_independent_dominating",
    "brute_independent_sets",
    "brute_quasi_chain",
    "brute_quasi_chain_subsets",
    "graph_catalog",
    "independent_set_masks",
    "is_independent_dominating",
    "min_independent_dominating_size",
]
