"""Biclique and independent-domination solvers for quasi-chain graphs.

Both rest on a cover of the independent sets: writing ``G = Z xor H`` with
``Z`` a chain graph, every independent set of ``G`` lies in a maximal
independent set of ``Z`` or in the common non-neighbourhood of a bottom edge,
and each such set induces a graph of maximum degree one in ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .encoding import Decomposition, decompose
from .graph import A, B, BipartiteGraph, VertexRef, bipartite_complement, bits, mask_of
from .recognition import require_quasi_chain

CHAIN_MIS = "maximal-independent-in-Z"
BOTTOM_EDGE = "bottom-edge"
OBJECTIVES = ("edges", "balanced")


@dataclass(frozen=True)
class CoverSet:
    a_mask: int
    b_mask: int
    kind: str
    edge: Optional[tuple[int, int]] = None  # the bottom edge for BOTTOM_EDGE sets

    @property
    def vertices(self) -> frozenset[VertexRef]:
        return frozenset(
            [VertexRef(A, i) for i in bits(self.a_mask)] + [VertexRef(B, j) for j in bits(self.b_mask)]
        )

    def max_degree_in(self, g: BipartiteGraph) -> int:
        d = 0
        for i in bits(self.a_mask):
            d = max(d, (g.rows[i] & self.b_mask).bit_count())
        for j in bits(self.b_mask):
            d = max(d, (g.cols[j] & self.a_mask).bit_count())
        return d


@dataclass(frozen=True)
class IndependentCover:
    sets: tuple[CoverSet, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def covers(self, a_mask: int, b_mask: int) -> bool:
        return any(a_mask & ~s.a_mask == 0 and b_mask & ~s.b_mask == 0 for s in self.sets)


def _chain_mis(z: BipartiteGraph) -> list[tuple[int, int]]:
    full_b = (1 << z.size_b) - 1
    ranked = sorted(range(z.size_a), key=lambda i: (-z.rows[i].bit_count(), i))
    out = []
    for j in range(len(ranked) + 1):
        a_part = mask_of(ranked[j:])
        nz = z.rows[ranked[j]] if j < len(ranked) else 0
        out.append((a_part, full_b & ~nz))
    # twins give nested duplicates; keep only the maximal ones
    uniq = list(dict.fromkeys(out))
    return [
        s for s in uniq
        if not any(t != s and s[0] & ~t[0] == 0 and s[1] & ~t[1] == 0 for t in uniq)
    ]


def independent_cover(g: BipartiteGraph, d: Decomposition) -> IndependentCover:
    """O(n) vertex sets, each inducing max degree 1 in ``g``, containing every independent set."""
    bad = d.problems(g)
    if bad:
        raise ValueError(f"invalid decomposition: {'; '.join(bad)}")
    sets = [CoverSet(a, b, CHAIN_MIS) for a, b in _chain_mis(d.z)]
    full_a = (1 << g.size_a) - 1
    full_b = (1 << g.size_b) - 1
    seen = {(s.a_mask, s.b_mask) for s in sets}
    for a, b in sorted(d.bottom):
        key = (full_a & ~g.cols[b], full_b & ~g.rows[a])
        if key not in seen:
            seen.add(key)
            sets.append(CoverSet(key[0], key[1], BOTTOM_EDGE, (a, b)))
    return IndependentCover(tuple(sets))


# bicliques ------------------------------------------------------------------------------


def _check_stm(s: int, t: int, m: int) -> None:
    if not 0 <= m <= s <= t:
        raise ValueError(f"need 0 <= m <= s <= t, got s={s}, t={t}, m={m}")


def near_complete_max_edge(s: int, t: int, m: int) -> tuple[int, int]:
    """Best ``(i, value)`` for ``K_{s,t}`` minus an ``m``-matching; smallest ``i`` on ties."""
    _check_stm(s, t, m)
    best_i, best = 0, t * s - m * s  # i = 0
    for i in range(1, m + 1):
        val = (t - m + i) * (s - i)
        if val > best:
            best_i, best = i, val
    return best_i, best


def near_complete_balanced(s: int, t: int, m: int) -> int:
    _check_stm(s, t, m)
    if t - s >= m:
        return s
    return (t - m + s) // 2


@dataclass(frozen=True)
class BicliqueSolution:
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def edge_count(self) -> int:
        return len(self.side_a) * len(self.side_b)

    def is_biclique_of(self, g: BipartiteGraph) -> bool:
        need = mask_of(self.side_b)
        return all(g.rows[a] & need == need for a in self.side_a)

    def to_dict(self, objective: str) -> dict:
        return {
            "objective": objective,
            "sideA": [[A, a] for a in sorted(self.side_a)],
            "sideB": [[B, b] for b in sorted(self.side_b)],
            "edgeCount": self.edge_count,
            "p": min(len(self.side_a), len(self.side_b)),
        }


_EMPTY = BicliqueSolution(frozenset(), frozenset())


def _near_complete_parts(g: BipartiteGraph, cs: CoverSet):
    """Split a cover member of the complement into small side, large side and the missing matching.

    Returns ``(small, large, partner, swapped)`` where ``partner`` maps each
    matched small-side vertex to its non-neighbour on the large side.
    """
    side_a, side_b = list(bits(cs.a_mask)), list(bits(cs.b_mask))
    partner_of_a = {}
    for a in side_a:
        miss = cs.b_mask & ~g.rows[a]
        if miss:
            partner_of_a[a] = miss.bit_length() - 1
    if len(side_a) <= len(side_b):
        return side_a, side_b, partner_of_a, False
    return side_b, side_a, {b: a for a, b in partner_of_a.items()}, True


def _solve_member(g: BipartiteGraph, cs: CoverSet, objective: str) -> tuple[int, BicliqueSolution]:
    small, large, partner, swapped = _near_complete_parts(g, cs)
    s, t, m = len(small), len(large), len(partner)
    if objective == "edges":
        i, value = near_complete_max_edge(s, t, m)
        p_small = p_large = None
    else:
        value = near_complete_balanced(s, t, m)
        # drop i matched small-side vertices so both sides still reach p
        i = next(k for k in range(m + 1) if min(s - k, t - m + k) >= value)
        p_small = p_large = value
    if value == 0:
        return 0, _EMPTY
    matched = [v for v in small if v in partner]
    dropped = set(matched[:i])
    kept_small = [v for v in small if v not in dropped]
    banned = {partner[v] for v in kept_small if v in partner}
    kept_large = [v for v in large if v not in banned]
    if p_small is not None:
        kept_small, kept_large = kept_small[:p_small], kept_large[:p_large]
    sol = (frozenset(kept_large), frozenset(kept_small)) if swapped else (frozenset(kept_small), frozenset(kept_large))
    return value, BicliqueSolution(*sol)


def _best_biclique(g: BipartiteGraph, objective: str) -> BicliqueSolution:
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    require_quasi_chain(g)
    comp = bipartite_complement(g)
    cover = independent_cover(comp, decompose(comp))
    best_val, best = 0, _EMPTY
    for cs in cover.sets:
        val, sol = _solve_member(g, cs, objective)
        if val > best_val:
            best_val, best = val, sol
    if not best.is_biclique_of(g):
        raise AssertionError(f"reconstructed sides {best} are not a biclique")
    return best


def max_edge_biclique(g: BipartiteGraph) -> BicliqueSolution:
    return _best_biclique(g, "edges")


def balanced_biclique(g: BipartiteGraph) -> BicliqueSolution:
    return _best_biclique(g, "balanced")


# independent domination ---------------------------------------------------------------------


def _is_ids(g: BipartiteGraph, a_mask: int, b_mask: int) -> bool:
    dom_a, dom_b = a_mask, b_mask
    for i in bits(a_mask):
        if g.rows[i] & b_mask:
            return False
        dom_b |= g.rows[i]
    for j in bits(b_mask):
        dom_a |= g.cols[j]
    return dom_a == (1 << g.size_a) - 1 and dom_b == (1 << g.size_b) - 1


def _ids_within(g: BipartiteGraph, a_in: int, b_in: int) -> Optional[tuple[int, int]]:
    full_a = (1 << g.size_a) - 1
    full_b = (1 << g.size_b) - 1
    deg1_a = mask_of(i for i in bits(a_in) if g.rows[i] & b_in)
    deg1_b = mask_of(j for j in bits(b_in) if g.cols[j] & a_in)
    for i in bits(deg1_a):
        if (g.rows[i] & b_in).bit_count() > 1:
            raise ValueError("the set induces a vertex of degree at least 2")
    for j in bits(deg1_b):
        if (g.cols[j] & a_in).bit_count() > 1:
            raise ValueError("the set induces a vertex of degree at least 2")
    iso_a, iso_b = a_in & ~deg1_a, b_in & ~deg1_b  # I'': forced into the solution
    # vertices with a neighbour in I'' or in I'
    a2 = mask_of(i for i in range(g.size_a) if g.rows[i] & iso_b)
    b2 = mask_of(j for j in range(g.size_b) if g.cols[j] & iso_a)
    a1_all = mask_of(i for i in range(g.size_a) if g.rows[i] & deg1_b)
    b1_all = mask_of(j for j in range(g.size_b) if g.cols[j] & deg1_a)
    if (a_in | a2 | a1_all) != full_a or (b_in | b2 | b1_all) != full_b:
        return None  # I does not dominate G
    a1 = a1_all & ~(a2 | deg1_a)
    b1 = b1_all & ~(b2 | deg1_b)
    chosen_a, chosen_b = iso_a, iso_b
    if deg1_a:
        # an empty A' (or B') puts no demand on the B (or A) endpoints
        xs = [x for x in bits(deg1_a) if g.rows[x] & b1 == b1] if b1 else [-1]
        ys = [y for y in bits(deg1_b) if g.cols[y] & a1 == a1] if a1 else [-1]
        pair = next(
            ((x, y) for x in xs for y in ys if x < 0 or y < 0 or not g.rows[x] >> y & 1), None
        )
        if pair is None:
            return None
        x, y = pair
        if x >= 0:
            chosen_a |= 1 << x
        if y >= 0:
            chosen_b |= 1 << y
        for i in bits(deg1_a):
            j = (g.rows[i] & b_in).bit_length() - 1
            if i != x and j != y:
                chosen_a |= 1 << i
    return chosen_a, chosen_b


def dominating_subset_in(g: BipartiteGraph, vertices) -> Optional[frozenset[VertexRef]]:
    """An independent dominating set of ``g`` inside ``vertices``, or ``None``.

    ``vertices`` must induce maximum degree at most one.  Degree-0 members are
    forced; from each induced edge exactly one endpoint is taken, using a
    non-adjacent pair ``x`` (covering the remaining B) and ``y`` (covering the
    remaining A) and the A-endpoint elsewhere.
    """
    a_in = mask_of(v.index for v in vertices if v.side == A)
    b_in = mask_of(v.index for v in vertices if v.side == B)
    res = _ids_within(g, a_in, b_in)
    if res is None:
        return None
    if not _is_ids(g, *res):
        raise AssertionError("constructed set is not independent and dominating")
    return CoverSet(res[0], res[1], "").vertices


def independent_dominating_set(g: BipartiteGraph) -> frozenset[VertexRef]:
    """A minimum independent dominating set (equivalently a smallest maximal independent set)."""
    require_quasi_chain(g)
    cover = independent_cover(g, decompose(g))
    best: Optional[tuple[int, int]] = None
    for cs in cover.sets:
        res = _ids_within(g, cs.a_mask, cs.b_mask)
        if res is None:
            continue
        if best is None or res[0].bit_count() + res[1].bit_count() < best[0].bit_count() + best[1].bit_count():
            best = res
    if best is None or not _is_ids(g, *best):
        raise AssertionError("no cover member yields an independent dominating set")
    return CoverSet(best[0], best[1], "").vertices


def ids_to_dict(s: frozenset[VertexRef]) -> dict:
    return {"objective": "independent-dominating-set", "size": len(s), "vertices": [list(v) for v in sorted(s)]}


__all__ = [
    "BOTTOM_EDGE",
    "CHAIN_MIS",
    "BicliqueSolution",
    "CoverSet",
    "IndependentCover",
    "balanced_biclique",
    "dominating_subset_in",
    "ids_to_dict",
    "independent_cover",
    "independent_dominating_set",
    "max_edge_biclique",
    "near_complete_balanced",
    "near_complete_max_edge",
]
