"""Quasi-permutation graphs: permutations as coloured quasi-chain graphs.

For ``pi`` on ``n`` entries the graph has ``a_1..a_2n`` and ``b_1..b_2n`` with
``a_i b_j`` for all ``i <= j`` and ``a_{n+i} b_{pi(i)}`` for ``i = 1..n``
(vertex ``a_i`` is A-index ``i - 1``).  Shifting to
``(1, pi(1)+1, ..., pi(n)+1)`` first makes coloured containment of the
graphs mirror pattern containment of the permutations.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Sequence

from .graph import BipartiteGraph
from .recognition import require_quasi_chain

PATTERN_MAX_ENTRIES = 10


class NotQuasiPermutationGraphError(ValueError):
    pass


def check_permutation(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_permutation(text: str) -> tuple[int, ...]:
    """Read one-line notation such as ``2,1,3``."""
    try:
        entries = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise ValueError(f"malformed permutation {text!r}") from exc
    return check_permutation(entries)


def format_permutation(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def star_permutation(p: Sequence[int]) -> tuple[int, ...]:
    return (1, *(x + 1 for x in check_permutation(p)))


def qp_graph(p: Sequence[int]) -> BipartiteGraph:
    p = check_permutation(p)
    n = len(p)
    if n < 1:
        raise ValueError("the permutation must have at least one entry")
    rows = []
    for i in range(2 * n):
        r = ((1 << 2 * n) - 1) & ~((1 << i) - 1)
        if i >= n:
            r |= 1 << (p[i - n] - 1)
        rows.append(r)
    return BipartiteGraph(2 * n, 2 * n, tuple(rows))


def qp_graph_star(p: Sequence[int]) -> BipartiteGraph:
    return qp_graph(star_permutation(p))


def qp_degree_sequence(n: int) -> list[int]:
    """Sorted degrees of either part of a quasi-permutation graph on ``n`` entries."""
    return sorted([*range(2, n + 2), *range(n + 1, 2 * n + 1)])


def recover_permutation(g: BipartiteGraph) -> tuple[int, ...]:
    """Read ``pi`` back from a graph isomorphic to ``qp_graph(pi)`` under any labelling.

    The A-vertex of degree ``d`` (``2 <= d <= n``) is ``a_{n+i}`` with
    ``i = n - d + 2``; its lowest-degree neighbour is ``b_{pi(i)}``, whose degree is
    ``pi(i) + 1``.  The single value left over is ``pi(1)``.
    """
    if g.size_a != g.size_b or g.size_a == 0 or g.size_a % 2:
        raise NotQuasiPermutationGraphError(f"parts must both have the same even size, got ({g.size_a}, {g.size_b})")
    n = g.size_a // 2
    want = qp_degree_sequence(n)
    deg_a = [r.bit_count() for r in g.rows]
    deg_b = [c.bit_count() for c in g.cols]
    if sorted(deg_a) != want or sorted(deg_b) != want:
        raise NotQuasiPermutationGraphError("degree sequences do not match a quasi-permutation graph")
    by_degree = {d: i for i, d in enumerate(deg_a) if Counter(deg_a)[d] == 1}
    pi = [0] * n
    for d in range(2, n + 1):
        i = n - d + 2
        nbrs = [j for j in range(g.size_b) if g.rows[by_degree[d]] >> j & 1]
        k = min(deg_b[j] for j in nbrs)
        pi[i - 1] = k - 1
    missing = set(range(1, n + 1)) - set(pi[1:])
    if len(missing) != 1:
        raise NotQuasiPermutationGraphError("entries read from the graph repeat")
    pi[0] = missing.pop()
    pi_t = tuple(pi)
    if not _matches(g, qp_graph(pi_t), deg_a, deg_b, n):
        raise NotQuasiPermutationGraphError("graph is not isomorphic to the quasi-permutation graph it implies")
    return pi_t


def _matches(g: BipartiteGraph, ref: BipartiteGraph, deg_a: list[int], deg_b: list[int], n: int) -> bool:
    # reference degrees are distinct except for the two vertices of degree n+1 on
    # each side, so only four candidate colour-preserving bijections remain
    ref_a = [r.bit_count() for r in ref.rows]
    ref_b = [c.bit_count() for c in ref.cols]

    def maps(deg: list[int], ref_deg: list[int]):
        slot = {d: [i for i, e in enumerate(ref_deg) if e == d] for d in set(ref_deg)}
        twins = [v for v, d in enumerate(deg) if d == n + 1]
        base = [0] * len(deg)
        for v, d in enumerate(deg):
            if d != n + 1:
                base[v] = slot[d][0]
        for first, second in ((0, 1), (1, 0)):
            m = list(base)
            m[twins[0]], m[twins[1]] = slot[n + 1][first], slot[n + 1][second]
            yield m

    for pa in maps(deg_a, ref_a):
        for pb in maps(deg_b, ref_b):
            if g.relabel(pa, pb) == ref:
                return True
    return False


def pattern_contains(rho: Sequence[int], pi: Sequence[int]) -> bool:
    """True iff ``rho`` has a subsequence order-isomorphic to ``pi``."""
    rho, pi = check_permutation(rho), check_permutation(pi)
    if len(rho) > PATTERN_MAX_ENTRIES:
        from .oracles import OracleBudgetError

        raise OracleBudgetError(f"pattern search limited to {PATTERN_MAX_ENTRIES} entries")
    k = len(pi)
    for idx in combinations(range(len(rho)), k):
        vals = [rho[i] for i in idx]
        if all((vals[x] < vals[y]) == (pi[x] < pi[y]) for x in range(k) for y in range(x + 1, k)):
            return True
    return False


def star_gadget(g: BipartiteGraph, h: BipartiteGraph) -> tuple[BipartiteGraph, BipartiteGraph]:
    """Attach to each graph a new white vertex joined to every black vertex and to ``p`` new black leaves.

    ``p = max degree of g + 1``; the same ``p`` is used for both graphs.
    """
    for name, x in (("g", g), ("h", h)):
        if not x.is_connected():
            raise ValueError(f"{name} must be connected")
        require_quasi_chain(x)
    p = g.max_degree() + 1
    return _with_star(g, p), _with_star(h, p)


def _with_star(g: BipartiteGraph, p: int) -> BipartiteGraph:
    nb = g.size_b + p
    center = (1 << nb) - 1
    return BipartiteGraph(g.size_a + 1, nb, (*g.rows, center))


__all__ = [
    "NotQuasiPermutationGraphError",
    "check_permutation",
    "format_permutation",
    "parse_permutation",
    "pattern_contains",
    "qp_degree_sequence",
    "qp_graph",
    "qp_graph_star",
    "recover_permutation",
    "star_gadget",
    "star_permutation",
]
