"""Enhanced words over ``{a, b}``.

A plain word describes the chain graph in which every ``a`` is joined to
every ``b`` after it.  Bottom marks ``(p_a, p_b)`` with ``p_a < p_b`` delete
such an edge; top marks ``(p_b, p_a)`` with ``p_b < p_a`` add an edge between
a ``b`` and a later ``a``.  Each kind of mark is a matching.  Positions are
1-based throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .graph import A, B, BipartiteGraph, VertexRef


def _pairs(items: Iterable) -> frozenset[tuple[int, int]]:
    return frozenset((int(p), int(q)) for p, q in items)


@dataclass(frozen=True)
class EnhancedWord:
    word: str
    top: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    bottom: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", _pairs(self.top))
        object.__setattr__(self, "bottom", _pairs(self.bottom))
        if set(self.word) - {"a", "b"}:
            raise ValueError(f"word must use only the letters a and b: {self.word!r}")
        n = len(self.word)
        for kind, marks, first, second in (
            ("top", self.top, "b", "a"),
            ("bottom", self.bottom, "a", "b"),
        ):
            used: set[int] = set()
            for p, q in marks:
                if not (1 <= p < q <= n):
                    raise ValueError(f"{kind} mark {(p, q)} out of range or misordered")
                if self.word[p - 1] != first or self.word[q - 1] != second:
                    raise ValueError(f"{kind} mark {(p, q)} must join {first} to a later {second}")
                if p in used or q in used:
                    raise ValueError(f"{kind} marks do not form a matching")
                used.update((p, q))

    def __len__(self) -> int:
        return len(self.word)

    @property
    def a_positions(self) -> list[int]:
        return [p for p, c in enumerate(self.word, 1) if c == "a"]

    @property
    def b_positions(self) -> list[int]:
        return [p for p, c in enumerate(self.word, 1) if c == "b"]

    def vertex_at(self, p: int) -> VertexRef:
        """Vertex of the decoded graph that sits at position ``p``."""
        letter = self.word[p - 1]
        rank = self.word[: p - 1].count(letter)
        return VertexRef(A if letter == "a" else B, rank)

    def plain(self) -> "EnhancedWord":
        return EnhancedWord(self.word)

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "top": [list(m) for m in sorted(self.top)],
            "bottom": [list(m) for m in sorted(self.bottom)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "EnhancedWord":
        try:
            word = data["word"]
            top = data.get("top", [])
            bottom = data.get("bottom", [])
        except (AttributeError, KeyError) as exc:
            raise ValueError(f"malformed enhanced word: {exc}") from exc
        if not isinstance(word, str):
            raise ValueError("word must be a string")
        for m in [*top, *bottom]:
            if not (isinstance(m, list) and len(m) == 2 and all(isinstance(x, int) for x in m)):
                raise ValueError(f"malformed mark {m!r}")
        if len(set(map(tuple, top))) != len(top) or len(set(map(tuple, bottom))) != len(bottom):
            raise ValueError("duplicate marks")
        return cls(word, frozenset(map(tuple, top)), frozenset(map(tuple, bottom)))

    @classmethod
    def from_json(cls, text: str) -> "EnhancedWord":
        return cls.from_dict(json.loads(text))


def decode_enhanced(w: EnhancedWord) -> BipartiteGraph:
    """Graph of ``w``: A is the a-positions in order, B the b-positions in order."""
    a_rank: dict[int, int] = {}
    b_rank: dict[int, int] = {}
    rows: list[int] = []
    later_b = 0
    # scan right to left so each a sees the b's after it
    b_total = w.word.count("b")
    for p in range(len(w.word), 0, -1):
        if w.word[p - 1] == "b":
            b_total -= 1
            b_rank[p] = b_total
            later_b |= 1 << b_total
        else:
            rows.append(later_b)
    rows.reverse()
    for i, p in enumerate(w.a_positions):
        a_rank[p] = i
    for p_a, p_b in w.bottom:
        rows[a_rank[p_a]] ^= 1 << b_rank[p_b]
    for p_b, p_a in w.top:
        rows[a_rank[p_a]] ^= 1 << b_rank[p_b]
    return BipartiteGraph(len(a_rank), len(b_rank), tuple(rows))


def _mirror(marks: frozenset[tuple[int, int]], n: int) -> frozenset[tuple[int, int]]:
    return frozenset((n + 1 - q, n + 1 - p) for p, q in marks)


def word_complement(w: EnhancedWord) -> EnhancedWord:
    """Reverse the word and exchange top and bottom marks.

    Decodes to the bipartite complement; vertex ``a_i`` of the input becomes
    ``a_{k-1-i}`` of the output (and likewise for B) since the order reverses.
    """
    n = len(w)
    return EnhancedWord(w.word[::-1], _mirror(w.bottom, n), _mirror(w.top, n))


def word_reflect(w: EnhancedWord) -> EnhancedWord:
    """Swap the letters and reverse; decodes to the part-swapped graph."""
    n = len(w)
    swapped = w.word.translate(str.maketrans("ab", "ba"))[::-1]
    return EnhancedWord(swapped, _mirror(w.top, n), _mirror(w.bottom, n))
