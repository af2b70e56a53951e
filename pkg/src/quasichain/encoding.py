"""Enhanced letter representations of quasi-chain graphs.

The encoder peels a vertex of degree at most one (possibly after
complementing and/or swapping the parts), recursively represents the rest,
and puts the peeled vertex back as a leading ``b``.  When the peeled vertex
is pendant to ``x`` it is attached to ``x`` by a top mark, which first needs
``x`` to be free of top marks; :func:`free_top_edge` rewrites the word with
local moves until that holds.

Local moves on adjacent letters (all preserve the decoded graph):

* ``aa``/``bb``: swap, marks travel with their letters;
* ``ab`` plain <-> ``ba`` with a top mark;
* ``ab`` with a bottom mark <-> ``ba`` plain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, NamedTuple, Optional, Sequence

from .graph import (
    A,
    B,
    BipartiteGraph,
    ChainOrdering,
    VertexRef,
    bits,
    is_chain_graph,
    is_matching,
    other,
    symmetric_difference,
)
from .recognition import quasi_chain, require_quasi_chain
from .words import EnhancedWord, decode_enhanced

Token = Hashable

NONE = "none"
COMPLEMENT = "complement"
REFLECT = "reflect"
BOTH = "complement+reflect"
TRANSFORMS = (NONE, REFLECT, COMPLEMENT, BOTH)


class RewriteError(RuntimeError):
    """The top-edge rewrite got stuck; the input violated its precondition or there is a bug."""


class MoveError(RewriteError):
    pass


class TokenWord:
    """Mutable enhanced word whose letters are opaque vertex tokens."""

    def __init__(
        self,
        seq: Sequence[Token] = (),
        letter: Optional[dict] = None,
        top: Optional[dict] = None,
        bottom: Optional[dict] = None,
    ):
        self.seq: list[Token] = list(seq)
        self.letter: dict[Token, str] = dict(letter or {})
        self.top: dict[Token, Token] = dict(top or {})
        self.bottom: dict[Token, Token] = dict(bottom or {})
        self.pos: dict[Token, int] = {t: i for i, t in enumerate(self.seq)}
        self.moves = 0
        self.on_move: Optional[Callable[["TokenWord"], None]] = None

    @classmethod
    def from_enhanced(cls, w: EnhancedWord, tokens: Optional[Sequence[Token]] = None) -> "TokenWord":
        tokens = list(tokens) if tokens is not None else list(range(1, len(w) + 1))
        letter = dict(zip(tokens, w.word))
        top: dict = {}
        bottom: dict = {}
        for p, q in w.top:
            top[tokens[p - 1]] = tokens[q - 1]
            top[tokens[q - 1]] = tokens[p - 1]
        for p, q in w.bottom:
            bottom[tokens[p - 1]] = tokens[q - 1]
            bottom[tokens[q - 1]] = tokens[p - 1]
        return cls(tokens, letter, top, bottom)

    def to_enhanced(self) -> tuple[EnhancedWord, tuple[Token, ...]]:
        word = "".join(self.letter[t] for t in self.seq)
        top = set()
        bottom = set()
        for t, u in self.top.items():
            if self.letter[t] == "b":
                top.add((self.pos[t] + 1, self.pos[u] + 1))
        for t, u in self.bottom.items():
            if self.letter[t] == "a":
                bottom.add((self.pos[t] + 1, self.pos[u] + 1))
        return EnhancedWord(word, frozenset(top), frozenset(bottom)), tuple(self.seq)

    def __len__(self) -> int:
        return len(self.seq)

    def edges(self) -> set[tuple[Token, Token]]:
        """Decoded edge set as ``(a_token, b_token)`` pairs."""
        out = set()
        seen_a: list[Token] = []
        for t in self.seq:
            if self.letter[t] == "a":
                seen_a.append(t)
            else:
                for a in seen_a:
                    if self.bottom.get(a) != t:
                        out.add((a, t))
        for t, u in self.top.items():
            if self.letter[t] == "a":
                out.add((t, u))
        return out

    # primitive moves ---------------------------------------------------------

    def swap(self, i: int) -> None:
        """Exchange the letters at 0-based positions ``i`` and ``i + 1``."""
        u, v = self.seq[i], self.seq[i + 1]
        lu, lv = self.letter[u], self.letter[v]
        if lu == lv:
            pass
        elif lu == "a":
            if self.bottom.get(u) == v:
                del self.bottom[u], self.bottom[v]
            elif u in self.top or v in self.top:
                raise MoveError(f"cannot swap {u!r}{v!r}: a top mark is already in use")
            else:
                self.top[u], self.top[v] = v, u
        else:
            if self.top.get(u) == v:
                del self.top[u], self.top[v]
            elif u in self.bottom or v in self.bottom:
                raise MoveError(f"cannot swap {u!r}{v!r}: a bottom mark is already in use")
            else:
                self.bottom[u], self.bottom[v] = v, u
        self.seq[i], self.seq[i + 1] = v, u
        self.pos[u], self.pos[v] = i + 1, i
        self.moves += 1
        if self.on_move is not None:
            self.on_move(self)

    def slide(self, tok: Token, target: int) -> None:
        """Move ``tok`` to position ``target`` across letters equal to its own."""
        while self.pos[tok] < target:
            i = self.pos[tok]
            if self.letter[self.seq[i + 1]] != self.letter[tok]:
                raise MoveError(f"cannot slide {tok!r} right past a different letter")
            self.swap(i)
        while self.pos[tok] > target:
            i = self.pos[tok]
            if self.letter[self.seq[i - 1]] != self.letter[tok]:
                raise MoveError(f"cannot slide {tok!r} left past a different letter")
            self.swap(i - 1)

    # whole-word operations -------------------------------------------------

    def prefix(self, tok: Token, letter: str) -> None:
        self.seq.insert(0, tok)
        self.letter[tok] = letter
        self.pos = {t: i for i, t in enumerate(self.seq)}

    def reverse(self) -> None:
        self.seq.reverse()
        n = len(self.seq)
        self.pos = {t: n - 1 - i for t, i in self.pos.items()}

    def complement(self) -> None:
        self.reverse()
        self.top, self.bottom = self.bottom, self.top

    def reflect(self) -> None:
        self.reverse()
        for t in self.letter:
            self.letter[t] = "b" if self.letter[t] == "a" else "a"

    def describe(self) -> str:
        w, _ = self.to_enhanced()
        return f"{w.word} top={sorted(w.top)} bottom={sorted(w.bottom)}"


# the top-edge freeing rewrite ---------------------------------------------------


def _free_top(tw: TokenWord, x: Token, max_rounds: Optional[int] = None) -> int:
    """Rewrite ``tw`` in place until ``x`` carries no top mark; returns rounds used.

    With ``y'`` the top partner of ``x`` the loop shrinks the stretch of
    letters strictly between them (and, at equal length, the number of
    bottom marks inside it) until they are neighbours, then swaps them.
    """
    n = len(tw)
    limit = max_rounds if max_rounds is not None else 4 * n * n + 16
    rounds = 0
    letter = tw.letter
    while x in tw.top:
        rounds += 1
        if rounds > limit:
            raise RewriteError(f"no progress after {limit} rounds freeing {x!r}: {tw.describe()}")
        yp = tw.top[x]
        i, j = tw.pos[yp], tw.pos[x]
        seq = tw.seq
        if j == i + 1:
            tw.swap(i)
            continue
        if letter[seq[i + 1]] == "b":
            tw.swap(i)
            continue
        if letter[seq[j - 1]] == "a":
            tw.swap(j - 1)
            continue
        ia, ib = i + 1, j - 1
        a_star, b_star = seq[ia], seq[ib]
        if tw.bottom.get(a_star) == b_star:
            _bottom_matched_round(tw, ia, ib, j)
        else:
            _unmatched_round(tw, ia, ib, j, x)
    return rounds


def _unmatched_round(tw: TokenWord, ia: int, ib: int, j: int, x: Token) -> None:
    seq, letter = tw.seq, tw.letter
    a_star, b_star = seq[ia], seq[ib]
    k = next(p for p in range(ia + 1, ib + 1) if letter[seq[p]] == "b")
    if k < ib:
        # a second b inside the stretch: it must be the bottom partner of a*
        b_other = seq[k]
        if tw.bottom.get(a_star) != b_other:
            raise RewriteError(f"unexpected pattern a b b between the top pair: {tw.describe()}")
        tw.slide(a_star, k - 1)
        tw.swap(k - 1)
        return
    partner = tw.bottom.get(b_star)
    if partner is not None and ia <= tw.pos[partner] < ib:
        tw.slide(partner, ib - 1)
        tw.swap(ib - 1)
        return
    if b_star not in tw.bottom and x not in tw.bottom:
        tw.swap(ib)
        return
    if a_star not in tw.top and b_star not in tw.top:
        tw.slide(a_star, ib - 1)
        tw.swap(ib - 1)
        return
    raise RewriteError(f"stuck with unmatched end letters: {tw.describe()}")


def _bottom_matched_round(tw: TokenWord, ia: int, ib: int, j: int) -> None:
    seq, letter = tw.seq, tw.letter
    a_star, b_star = seq[ia], seq[ib]
    if ib == ia + 1:
        tw.swap(ia)
        return
    if letter[seq[ia + 1]] == "a":
        tw.swap(ia)
        return
    if letter[seq[ib - 1]] == "b":
        tw.swap(ib - 1)
        return
    b_circ, a_circ = seq[ia + 1], seq[ib - 1]
    if a_star not in tw.top and b_circ not in tw.top:
        tw.swap(ia)
        return
    if a_circ not in tw.top and b_star not in tw.top:
        tw.swap(ib - 1)
        return
    a_prime = tw.top.get(b_circ)
    if a_prime is not None and tw.pos[a_prime] < j:
        tw.slide(a_prime, tw.pos[b_circ] + 1)
        tw.swap(tw.pos[b_circ])
        return
    raise RewriteError(f"stuck with bottom-matched end letters: {tw.describe()}")


class Rewrite(NamedTuple):
    word: EnhancedWord
    origin: tuple[int, ...]  # origin[p - 1] = input position of the letter now at p


def _with_pendant(g: BipartiteGraph, a: int) -> BipartiteGraph:
    rows = list(g.rows)
    rows[a] |= 1 << g.size_b
    return BipartiteGraph(g.size_a, g.size_b + 1, tuple(rows))


def free_top_edge(w: EnhancedWord, x: int, *, debug: bool = False) -> Rewrite:
    """Rewrite ``w`` so the ``a`` at position ``x`` has no top mark.

    Requires the graph of ``w`` with an extra pendant vertex hung on ``x`` to
    be quasi-chain (the situation the encoder is in).  The result decodes to
    the same graph under ``origin``.
    """
    if not 1 <= x <= len(w) or w.word[x - 1] != "a":
        raise ValueError(f"position {x} does not hold an a")
    g = decode_enhanced(w)
    xa = w.vertex_at(x).index
    if not quasi_chain(_with_pendant(g, xa)):
        raise ValueError("graph with a pendant vertex at x is not quasi-chain")
    tw = TokenWord.from_enhanced(w)
    if debug:
        expected = tw.edges()

        def check(t: TokenWord) -> None:
            if t.edges() != expected:
                raise RewriteError(f"move changed the decoded graph: {t.describe()}")

        tw.on_move = check
    _free_top(tw, x)
    word, origin = tw.to_enhanced()
    return Rewrite(word, tuple(origin))


# peeling -------------------------------------------------------------------------


class _PeelState:
    """Original graph seen through complement/reflect flags, minus peeled vertices."""

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self.rem = {A: (1 << g.size_a) - 1, B: (1 << g.size_b) - 1}
        self.comp = False
        self.refl = False

    def cur_side(self, orig_side: str, refl: bool) -> str:
        return other(orig_side) if refl else orig_side

    def nbrs(self, v: VertexRef, comp: bool) -> int:
        opp = self.rem[other(v.side)]
        m = self.g.side_masks(v.side)[v.index] & opp
        return opp & ~m if comp else m

    def choose(self) -> tuple[VertexRef, str]:
        """Pick ``(vertex, transform)`` so the vertex is in part B with degree <= 1 afterwards."""
        for transform in TRANSFORMS:
            comp = self.comp ^ (transform in (COMPLEMENT, BOTH))
            refl = self.refl ^ (transform in (REFLECT, BOTH))
            orig_side = B if not refl else A  # original side currently playing part B
            for i in bits(self.rem[orig_side]):
                v = VertexRef(orig_side, i)
                if self.nbrs(v, comp).bit_count() <= 1:
                    return v, transform
        raise RewriteError("no vertex of degree <= 1 in the graph or its complement")

    def apply(self, transform: str) -> None:
        self.comp ^= transform in (COMPLEMENT, BOTH)
        self.refl ^= transform in (REFLECT, BOTH)

    def remove(self, v: VertexRef) -> None:
        self.rem[v.side] &= ~(1 << v.index)

    def empty(self) -> bool:
        return not (self.rem[A] or self.rem[B])

    def expected_edges(self) -> set[tuple[VertexRef, VertexRef]]:
        cur_a = B if self.refl else A
        out = set()
        for i in bits(self.rem[cur_a]):
            u = VertexRef(cur_a, i)
            for j in bits(self.nbrs(u, self.comp)):
                out.add((u, VertexRef(other(cur_a), j)))
        return out


def peel_vertex(g: BipartiteGraph) -> tuple[VertexRef, str]:
    """A vertex that has degree <= 1 and lies in part B after the returned transform.

    Preference: the graph itself before its complement, part B before part A,
    lowest index first.
    """
    if g.num_vertices == 0:
        raise ValueError("cannot peel a vertex from the empty graph")
    require_quasi_chain(g)
    return _PeelState(g).choose()


# encoding ------------------------------------------------------------------------


@dataclass(frozen=True)
class Encoding:
    """An enhanced word together with the graph vertex sitting at each position."""

    word: EnhancedWord
    vertices: tuple[VertexRef, ...]

    def graph(self) -> BipartiteGraph:
        h = decode_enhanced(self.word)
        perm_a = [v.index for v in self.vertices if v.side == A]
        perm_b = [v.index for v in self.vertices if v.side == B]
        return h.relabel(perm_a, perm_b)

    def to_dict(self) -> dict:
        d = self.word.to_dict()
        d["map"] = [v.index for v in self.vertices]
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "Encoding":
        w = EnhancedWord.from_dict(data)
        idx = data.get("map")
        if idx is None:
            return cls(w, tuple(w.vertex_at(p) for p in range(1, len(w) + 1)))
        if len(idx) != len(w) or not all(isinstance(i, int) for i in idx):
            raise ValueError("map must list one vertex index per position")
        verts = tuple(VertexRef(A if c == "a" else B, i) for c, i in zip(w.word, idx))
        for side in (A, B):
            got = sorted(v.index for v in verts if v.side == side)
            if got != list(range(len(got))):
                raise ValueError(f"map is not a bijection onto part {side}")
        return cls(w, verts)


def _canonicalize(tw: TokenWord) -> None:
    """Within each run of equal letters put marked letters first, then by index."""
    seq = tw.seq
    start = 0
    while start < len(seq):
        end = start
        while end + 1 < len(seq) and tw.letter[seq[end + 1]] == tw.letter[seq[start]]:
            end += 1
        run = sorted(
            seq[start : end + 1],
            key=lambda t: (t not in tw.top and t not in tw.bottom, t.index),
        )
        seq[start : end + 1] = run
        start = end + 1
    tw.pos = {t: i for i, t in enumerate(seq)}


def encode_enhanced(g: BipartiteGraph, *, debug: bool = False) -> Encoding:
    """Enhanced letter representation of a quasi-chain graph.

    Raises :class:`NotQuasiChainError` (carrying an unbalanced 2P3) otherwise.
    With ``debug`` every local move and every rebuild step is checked against
    the graph it must represent.
    """
    require_quasi_chain(g)
    state = _PeelState(g)
    steps: list[tuple[VertexRef, Optional[VertexRef], str]] = []
    while not state.empty():
        y, transform = state.choose()
        state.apply(transform)
        nb = state.nbrs(y, state.comp)
        x = VertexRef(other(y.side), nb.bit_length() - 1) if nb else None
        state.remove(y)
        steps.append((y, x, transform))

    tw = TokenWord()
    if debug:
        expected: set = set()

        def check(t: TokenWord) -> None:
            if t.edges() != expected:
                raise RewriteError(f"move changed the decoded graph: {t.describe()}")

        tw.on_move = check

    for y, x, transform in reversed(steps):
        if x is not None and x in tw.top:
            if debug:
                expected = tw.edges()
            _free_top(tw, x)
        tw.prefix(y, "b")
        if x is not None:
            tw.top[y], tw.top[x] = x, y
        if transform in (COMPLEMENT, BOTH):
            tw.complement()
        if transform in (REFLECT, BOTH):
            tw.reflect()
        if debug:
            state.rem[y.side] |= 1 << y.index
            state.apply(transform)
            if tw.edges() != state.expected_edges():
                raise RewriteError(f"rebuild step for {y!r} produced the wrong graph")
    _canonicalize(tw)
    word, tokens = tw.to_enhanced()
    enc = Encoding(word, tokens)
    if debug and enc.graph() != g:
        raise RewriteError("encoding does not decode to the input graph")
    return enc


# decomposition -------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """``G = Z xor (bottom + top)`` with ``Z`` a chain graph.

    ``bottom`` lists edges of ``Z`` missing from ``G`` and ``top`` lists edges of
    ``G`` missing from ``Z``; each is a matching, given as ``(a, b)`` pairs.
    """

    z: BipartiteGraph
    bottom: tuple[tuple[int, int], ...]
    top: tuple[tuple[int, int], ...]
    encoding: Optional[Encoding] = None

    @property
    def h(self) -> BipartiteGraph:
        return BipartiteGraph.from_edges(self.z.size_a, self.z.size_b, [*self.bottom, *self.top])

    def graph(self) -> BipartiteGraph:
        return symmetric_difference(self.z, self.h)

    def problems(self, g: Optional[BipartiteGraph] = None) -> list[str]:
        out = []
        if not isinstance(is_chain_graph(self.z), ChainOrdering):
            out.append("Z is not a chain graph")
        if not is_matching(self.bottom):
            out.append("bottom edges are not a matching")
        if not is_matching(self.top):
            out.append("top edges are not a matching")
        if not all(self.z.has_edge(a, b) for a, b in self.bottom):
            out.append("a bottom edge is not an edge of Z")
        if any(self.z.has_edge(a, b) for a, b in self.top):
            out.append("a top edge is already an edge of Z")
        if len(set(self.bottom) | set(self.top)) != len(self.bottom) + len(self.top):
            out.append("an edge is both top and bottom")
        if self.h.max_degree() > 2:
            out.append("H has a vertex of degree above 2")
        if g is not None and self.graph() != g:
            out.append("Z xor H differs from the graph")
        return out

    def to_dict(self) -> dict:
        return {
            "z": self.z.to_dict(),
            "bottom": [list(e) for e in sorted(self.bottom)],
            "top": [list(e) for e in sorted(self.top)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Decomposition":
        try:
            z = BipartiteGraph.from_dict(data["z"])
            bottom = tuple(sorted((int(a), int(b)) for a, b in data["bottom"]))
            top = tuple(sorted((int(a), int(b)) for a, b in data["top"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed decomposition: {exc}") from exc
        d = cls(z, bottom, top)
        bad = d.problems()
        if bad:
            raise ValueError(f"invalid decomposition: {'; '.join(bad)}")
        return d


def decomposition_from_encoding(enc: Encoding) -> Decomposition:
    w = enc.word
    z = Encoding(w.plain(), enc.vertices).graph()
    at = enc.vertices
    bottom = tuple(sorted((at[p - 1].index, at[q - 1].index) for p, q in w.bottom))
    top = tuple(sorted((at[q - 1].index, at[p - 1].index) for p, q in w.top))
    return Decomposition(z, bottom, top, enc)


def decomposition_from_word(w: EnhancedWord) -> Decomposition:
    return decomposition_from_encoding(
        Encoding(w, tuple(w.vertex_at(p) for p in range(1, len(w) + 1)))
    )


def decompose(g: BipartiteGraph) -> Decomposition:
    d = decomposition_from_encoding(encode_enhanced(g))
    bad = d.problems(g)
    if bad:
        raise AssertionError(f"invalid decomposition: {bad}")
    return d
