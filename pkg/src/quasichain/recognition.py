"""Quasi-chain recognition with certificates.

A quasi-chain graph is a bipartite graph with no induced unbalanced 2P3.
Equivalently, in each part the vertices sorted by non-increasing degree form
a good ordering: every later vertex has at most one neighbour that is not a
neighbour of an earlier one.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import A, B, BipartiteGraph, VertexRef, bits, degree_order, other


class GoodOrdering(NamedTuple):
    side: str
    order: tuple[int, ...]


class Unbalanced2P3(NamedTuple):
    """Two same-side centres, each joined to exactly its own two leaves."""

    centers: tuple[VertexRef, VertexRef]
    leaves: tuple[tuple[VertexRef, VertexRef], tuple[VertexRef, VertexRef]]

    def vertices(self) -> list[VertexRef]:
        return [*self.centers, *self.leaves[0], *self.leaves[1]]

    def to_dict(self) -> dict:
        return {
            "kind": "witness",
            "centers": [list(c) for c in self.centers],
            "leaves": [list(x) for pair in self.leaves for x in pair],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Unbalanced2P3":
        try:
            c = [VertexRef(str(s), int(i)) for s, i in data["centers"]]
            l = [VertexRef(str(s), int(i)) for s, i in data["leaves"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed witness: {exc}") from exc
        if len(c) != 2 or len(l) != 4:
            raise ValueError("a witness has two centres and four leaves")
        return cls((c[0], c[1]), ((l[0], l[1]), (l[2], l[3])))


class QuasiChainCertificate(NamedTuple):
    order_a: tuple[int, ...]
    order_b: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": "good", "orderA": list(self.order_a), "orderB": list(self.order_b)}


class NotQuasiChainError(ValueError):
    def __init__(self, witness: Unbalanced2P3):
        super().__init__(f"graph contains an induced unbalanced 2P3: {witness}")
        self.witness = witness


def is_good_ordering(g: BipartiteGraph, side: str, order: tuple[int, ...]) -> bool:
    masks = g.side_masks(side)
    if sorted(order) != list(range(len(masks))):
        return False
    for i, u in enumerate(order):
        nu = masks[u]
        for v in order[i + 1 :]:
            if (masks[v] & ~nu).bit_count() > 1:
                return False
    return True


def good_ordering(g: BipartiteGraph, side: str) -> GoodOrdering | tuple[VertexRef, VertexRef]:
    """Degree order of ``side`` (ties by index) if it is good, else a failing pair.

    The failing pair ``(u, v)`` has ``deg(u) >= deg(v)`` and ``|N(v) - N(u)| >= 2``.
    """
    masks = g.side_masks(side)
    order = degree_order(masks)
    for i, u in enumerate(order):
        nu = masks[u]
        for v in order[i + 1 :]:
            if (masks[v] & ~nu).bit_count() > 1:
                return VertexRef(side, u), VertexRef(side, v)
    return GoodOrdering(side, order)


def extract_witness(g: BipartiteGraph, u: VertexRef, v: VertexRef) -> Unbalanced2P3:
    if u.side != v.side or u.index == v.index:
        raise ValueError("centres must be two distinct vertices of the same part")
    nu, nv = g.neighbors(u), g.neighbors(v)
    if nu.bit_count() < nv.bit_count() or (nv & ~nu).bit_count() < 2:
        raise ValueError(f"{u!r}, {v!r} do not satisfy deg(u) >= deg(v), |N(v)-N(u)| >= 2")
    leaf_side = other(u.side)
    pu = [VertexRef(leaf_side, x) for x in list(bits(nu & ~nv))[:2]]
    pv = [VertexRef(leaf_side, x) for x in list(bits(nv & ~nu))[:2]]
    witness = Unbalanced2P3((u, v), ((pu[0], pu[1]), (pv[0], pv[1])))
    if not verify_witness(g, witness):
        raise AssertionError(f"extracted witness {witness} does not verify")
    return witness


def verify_witness(g: BipartiteGraph, w: Unbalanced2P3) -> bool:
    (c1, c2), (l1, l2) = w.centers, w.leaves
    if c1.side != c2.side or c1 == c2:
        return False
    leaves = [*l1, *l2]
    if len(set(leaves)) != 4 or any(x.side == c1.side for x in leaves):
        return False
    for c, own, alien in ((c1, l1, l2), (c2, l2, l1)):
        if not all(g.adjacent(c, x) for x in own):
            return False
        if any(g.adjacent(c, x) for x in alien):
            return False
    return True


def is_quasi_chain(g: BipartiteGraph) -> QuasiChainCertificate | Unbalanced2P3:
    orders = {}
    for side in (A, B):
        res = good_ordering(g, side)
        if not isinstance(res, GoodOrdering):
            return extract_witness(g, *res)
        orders[side] = res.order
    return QuasiChainCertificate(orders[A], orders[B])


def quasi_chain(g: BipartiteGraph) -> bool:
    return isinstance(is_quasi_chain(g), QuasiChainCertificate)


def require_quasi_chain(g: BipartiteGraph) -> QuasiChainCertificate:
    cert = is_quasi_chain(g)
    if isinstance(cert, Unbalanced2P3):
        raise NotQuasiChainError(cert)
    return cert
