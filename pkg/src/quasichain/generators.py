"""Named graph families and seeded random quasi-chain instances.

Random instances use numpy's PCG64 bit generator seeded with a 64-bit
integer, so a ``(n, seed, mark_density)`` triple names one graph on every
platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import BipartiteGraph, mask_of
from .recognition import quasi_chain
from .words import EnhancedWord, decode_enhanced

FAMILIES = ("zn", "qn", "dn", "random")
MAX_REJECTIONS = 1000


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    seed: int = 0
    mark_density: float = 0.2

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.mark_density <= 1.0:
            raise ValueError("mark_density must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def universal_chain(n: int) -> BipartiteGraph:
    """``Z_n``: ``a_i ~ b_j`` iff ``i <= j``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return BipartiteGraph(n, n, tuple(mask_of(range(i, n)) for i in range(n)))


def antichain_q(n: int) -> BipartiteGraph:
    """``Q_n``: ``Z_n`` minus the edges ``a_i b_{i+1}``, plus pendants at ``a_1`` and ``b_n``.

    A-indices ``0..n-1`` are ``a_1..a_n`` and index ``n`` is ``a'_n`` (pendant to
    ``b_n``); B-indices ``0..n-1`` are ``b_1..b_n`` and index ``n`` is ``b'_1``
    (pendant to ``a_1``).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    edges = [(i, j) for i in range(n) for j in range(i, n) if j != i + 1]
    edges += [(0, n), (n, n - 1)]
    return BipartiteGraph.from_edges(n + 1, n + 1, edges)


def double_chain(n: int) -> BipartiteGraph:
    """``D_n``: ``Z_{3n}`` minus ``a_i b_{i+1}``, keeping only indices not divisible by 3.

    Kept vertices are renumbered in order, so rung ``k`` (0-based) is
    ``{a_{2k}, a_{2k+1}, b_{2k}, b_{2k+1}}`` with edges ``a_{2k}b_{2k}`` and
    ``a_{2k+1}b_{2k+1}``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    kept = [i for i in range(1, 3 * n + 1) if i % 3]
    edges = [
        (p, q)
        for p, i in enumerate(kept)
        for q, j in enumerate(kept)
        if i <= j and j != i + 1
    ]
    return BipartiteGraph.from_edges(len(kept), len(kept), edges)


def _random_matching(rng: np.random.Generator, word: str, first: str, second: str, density: float):
    """Random matching of ``first``-letters to later ``second``-letters.

    Each position starts a mark with probability ``density / 2`` (so the
    expected fraction of marked positions is about ``density``).  The partner
    is drawn from the still-free eligible positions ordered by distance, with
    a geometric(1/2) rank; long marks stay possible but rare, which keeps the
    rejection rate of large words low.
    """
    n = len(word)
    used = [False] * n
    marks = []
    for p in rng.permutation(n):
        p = int(p)
        if used[p] or rng.random() >= density / 2:
            continue
        if word[p] == first:
            cands = [q for q in range(p + 1, n) if word[q] == second and not used[q]]
        else:
            cands = [q for q in range(p - 1, -1, -1) if word[q] == first and not used[q]]
        if not cands:
            continue
        q = cands[min(int(rng.geometric(0.5)) - 1, len(cands) - 1)]
        used[p] = used[q] = True
        lo, hi = min(p, q), max(p, q)
        marks.append((lo + 1, hi + 1))
    return frozenset(marks)


def random_enhanced_word(rng: np.random.Generator, n: int, mark_density: float) -> EnhancedWord:
    word = "".join("ab"[int(x)] for x in rng.integers(0, 2, n))
    top = _random_matching(rng, word, "b", "a", mark_density)
    bottom = _random_matching(rng, word, "a", "b", mark_density)
    return EnhancedWord(word, top, bottom)


def random_quasi_chain(spec: GeneratorSpec | int, seed: int | None = None, mark_density: float = 0.2) -> BipartiteGraph:
    """Random quasi-chain graph on ``n`` vertices (word length ``n``).

    Samples an enhanced word, decodes it, shuffles vertex indices within each
    part and keeps the first sample that is quasi-chain.
    """
    if not isinstance(spec, GeneratorSpec):
        spec = GeneratorSpec("random", spec, 0 if seed is None else seed, mark_density)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    for _ in range(MAX_REJECTIONS + 1):
        w = random_enhanced_word(rng, spec.n, spec.mark_density)
        g = decode_enhanced(w)
        g = g.relabel(rng.permutation(g.size_a).tolist(), rng.permutation(g.size_b).tolist())
        if quasi_chain(g):
            return g
    raise SamplingError(f"no quasi-chain sample after {MAX_REJECTIONS} rejections for {spec}")


def generate(spec: GeneratorSpec) -> BipartiteGraph:
    if spec.family == "zn":
        return universal_chain(spec.n)
    if spec.family == "qn":
        return antichain_q(spec.n)
    if spec.family == "dn":
        return double_chain(spec.n)
    return random_quasi_chain(spec)
