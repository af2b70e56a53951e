"""Logarithmic adjacency labels and low-contiguity vertex orders.

Both come from a decomposition ``G = Z xor H``.  Rank the A-vertices by
non-increasing ``Z``-neighbourhood (ties by index); then every ``N_Z(b)`` is a
prefix ``a_1..a_t`` of the ranking, and ``t`` is the threshold of ``b``.
Since ``H`` consists of a top and a bottom matching, ``a ~ b`` in ``G`` iff

    (rank(a) <= t(b)) xor (a is b's top partner) xor (a is b's bottom partner).

Packed labels
-------------
With ``w = ceil(log2(|A| + 1))`` an A-label is the side bit ``0`` followed by
``rank`` in ``w`` bits; a B-label is the side bit ``1`` followed by the
threshold, the rank of the top partner and the rank of the bottom partner,
each in ``w`` bits.  Ranks start at 1, so the value 0 means "no partner".
The longest label has ``1 + 3w`` bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .encoding import Decomposition, decompose
from .graph import A, B, BipartiteGraph, ChainOrdering, VertexRef, is_chain_graph
from .recognition import require_quasi_chain


@dataclass(frozen=True)
class VertexLabel:
    """Label of one vertex.

    ``z_key`` is the rank for A-vertices and the threshold for B-vertices.
    Partners are named by their own identifier in this scheme: an A-partner
    by its rank, a B-partner by its vertex index.
    """

    side: str
    id: int
    z_key: int
    top: Optional[int] = None
    bottom: Optional[int] = None

    def dump(self) -> str:
        opt = lambda x: "-" if x is None else str(x)
        return f"{self.side}:{self.id}:{self.z_key}:{opt(self.top)}:{opt(self.bottom)}"

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        parts = text.strip().split(":")
        if len(parts) != 5 or parts[0] not in (A, B):
            raise ValueError(f"malformed label {text!r}")
        try:
            nums = [None if x == "-" else int(x) for x in parts[1:]]
        except ValueError as exc:
            raise ValueError(f"malformed label {text!r}") from exc
        if nums[0] is None or nums[1] is None or any(x is not None and x < 0 for x in nums):
            raise ValueError(f"malformed label {text!r}")
        return cls(parts[0], nums[0], nums[1], nums[2], nums[3])


class LabelSet(NamedTuple):
    a: tuple[VertexLabel, ...]
    b: tuple[VertexLabel, ...]
    width: int

    def label(self, v: VertexRef) -> VertexLabel:
        return (self.a if v.side == A else self.b)[v.index]

    def dump(self) -> str:
        return "".join(lab.dump() + "\n" for lab in (*self.a, *self.b))

    def packed(self, v: VertexRef) -> str:
        return pack_label(self.label(v), self.width)


class ZStructure(NamedTuple):
    rank: tuple[int, ...]  # rank[a] in 1..|A|
    threshold: tuple[int, ...]  # threshold[b] = |N_Z(b)|
    top: dict[int, int]  # b -> a
    bottom: dict[int, int]


def _z_structure(g: BipartiteGraph, d: Optional[Decomposition] = None) -> ZStructure:
    """Ranking and thresholds of a chain part of ``g``; chain graphs use ``Z = G``."""
    if d is None:
        if isinstance(is_chain_graph(g), ChainOrdering):
            d = Decomposition(g, (), ())
        else:
            require_quasi_chain(g)
            d = decompose(g)
    z = d.z
    order = sorted(range(z.size_a), key=lambda i: (-z.rows[i].bit_count(), i))
    rank = [0] * z.size_a
    for r, a in enumerate(order, 1):
        rank[a] = r
    threshold = tuple(c.bit_count() for c in z.cols)
    for b, c in enumerate(z.cols):
        if any(rank[a] <= threshold[b] for a in range(z.size_a) if not c >> a & 1):
            raise AssertionError("Z-neighbourhoods are not prefixes of the ranking")
    return ZStructure(tuple(rank), threshold, {b: a for a, b in d.top}, {b: a for a, b in d.bottom})


def label_width(size_a: int) -> int:
    return max(1, math.ceil(math.log2(size_a + 1)))


def assign_labels(g: BipartiteGraph, d: Optional[Decomposition] = None) -> LabelSet:
    zs = _z_structure(g, d)
    rank = zs.rank
    top_of_a = {a: b for b, a in zs.top.items()}
    bottom_of_a = {a: b for b, a in zs.bottom.items()}
    labels_a = tuple(
        VertexLabel(A, a, rank[a], top_of_a.get(a), bottom_of_a.get(a)) for a in range(g.size_a)
    )
    labels_b = tuple(
        VertexLabel(
            B,
            b,
            zs.threshold[b],
            rank[zs.top[b]] if b in zs.top else None,
            rank[zs.bottom[b]] if b in zs.bottom else None,
        )
        for b in range(g.size_b)
    )
    return LabelSet(labels_a, labels_b, label_width(g.size_a))


def adjacent_from_labels(u: VertexLabel, v: VertexLabel) -> bool:
    if u.side == v.side:
        return False
    a, b = (u, v) if u.side == A else (v, u)
    r = a.z_key
    return (r <= b.z_key) ^ (b.top == r) ^ (b.bottom == r)


def pack_label(lab: VertexLabel, width: int) -> str:
    """Bit string of the fields the adjacency test needs (see module docstring)."""
    def field(x: Optional[int]) -> str:
        x = 0 if x is None else x
        if x >= 1 << width:
            raise ValueError(f"value {x} does not fit in {width} bits")
        return format(x, f"0{width}b")

    if lab.side == A:
        return "0" + field(lab.z_key)
    return "1" + field(lab.z_key) + field(lab.top) + field(lab.bottom)


def unpack_label(bitstring: str) -> VertexLabel:
    """Inverse of :func:`pack_label`; the width is implied by the length.  ``id`` is not stored and reads as 0."""
    if not bitstring or set(bitstring) - {"0", "1"}:
        raise ValueError(f"malformed packed label {bitstring!r}")
    body = bitstring[1:]
    if bitstring[0] == "0":
        if not body:
            raise ValueError("packed A-label has no rank field")
        return VertexLabel(A, 0, int(body, 2))
    if not body or len(body) % 3:
        raise ValueError("packed B-label must hold three equal fields")
    w = len(body) // 3
    t, top, bot = (int(body[i * w : (i + 1) * w], 2) for i in range(3))
    return VertexLabel(B, 0, t, top or None, bot or None)


def adjacent_packed(x: str, y: str) -> bool:
    return adjacent_from_labels(unpack_label(x), unpack_label(y))


def label_bound(g: BipartiteGraph) -> int:
    n = max(g.size_a, g.size_b)
    return 3 * math.ceil(math.log2(n + 1)) + 3


def max_label_bits(labels: LabelSet) -> int:
    return max((len(pack_label(lab, labels.width)) for lab in (*labels.a, *labels.b)), default=0)


# contiguity -------------------------------------------------------------------------


@dataclass(frozen=True)
class ContiguityLayout:
    order: tuple[VertexRef, ...]
    intervals: dict[VertexRef, tuple[tuple[int, int], ...]]  # inclusive position ranges

    @property
    def contiguity(self) -> int:
        return max((len(r) for r in self.intervals.values()), default=0)

    def neighbourhood(self, v: VertexRef) -> set[VertexRef]:
        return {self.order[p] for lo, hi in self.intervals[v] for p in range(lo, hi + 1)}

    def to_dict(self) -> dict:
        return {
            "order": [list(v) for v in self.order],
            "intervals": [
                {"vertex": list(v), "ranges": [list(r) for r in self.intervals[v]]} for v in self.order
            ],
            "contiguity": self.contiguity,
        }


def _runs(positions: Sequence[int]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for p in sorted(positions):
        if out and out[-1][1] == p - 1:
            out[-1] = (out[-1][0], p)
        else:
            out.append((p, p))
    return tuple(out)


def contiguity_layout(g: BipartiteGraph, d: Optional[Decomposition] = None) -> ContiguityLayout:
    """Ranked A-block then B by non-decreasing threshold; at most 3 ranges per vertex."""
    zs = _z_structure(g, d)
    a_order = sorted(range(g.size_a), key=lambda a: zs.rank[a])
    b_order = sorted(range(g.size_b), key=lambda b: (zs.threshold[b], b))
    order = tuple([VertexRef(A, a) for a in a_order] + [VertexRef(B, b) for b in b_order])
    pos = {v: i for i, v in enumerate(order)}
    intervals = {v: _runs([pos[u] for u in _nbr_refs(g, v)]) for v in order}
    return ContiguityLayout(order, intervals)


def _nbr_refs(g: BipartiteGraph, v: VertexRef) -> list[VertexRef]:
    side = B if v.side == A else A
    m = g.neighbors(v)
    return [VertexRef(side, i) for i in range(g.size(side)) if m >> i & 1]


__all__ = [
    "ContiguityLayout",
    "LabelSet",
    "VertexLabel",
    "adjacent_from_labels",
    "adjacent_packed",
    "assign_labels",
    "contiguity_layout",
    "label_bound",
    "label_width",
    "max_label_bits",
    "pack_label",
    "unpack_label",
]
