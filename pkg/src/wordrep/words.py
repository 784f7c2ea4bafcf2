"""Words over vertex alphabets: projection, alternation, and the graph a word defines."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, make_graph

Word = tuple[int, ...]


@dataclass(frozen=True)
class UniformityProfile:
    """Per-letter occurrence counts, with the common count when all are equal."""

    counts: dict[int, int]
    uniform_k: int | None


def project(word: Sequence[int], letters: Iterable[int]) -> Word:
    """The subsequence of ``word`` over ``letters``, order preserved.

    Letters absent from the word contribute nothing.
    """
    keep = set(letters)
    return tuple(c for c in word if c in keep)


def alternate(word: Sequence[int], x: int, y: int) -> bool:
    """True iff x and y strictly alternate in the word.

    Both letters must occur; a single occurrence of each counts as
    alternating (the two-letter projection may have any length >= 2).
    """
    if x == y:
        raise ValueError(f"alternation needs two distinct letters, got {x} twice")
    proj = project(word, (x, y))
    present = set(proj)
    if x not in present or y not in present:
        missing = x if x not in present else y
        raise ValueError(f"letter {missing} does not occur in the word")
    return all(a != b for a, b in zip(proj, proj[1:]))


def _alternating_pairs(word: Sequence[int], n: int) -> list[list[bool]]:
    """Pairwise alternation table for a word over letters 0..n-1 (single pass)."""
    alternating = [[True] * n for _ in range(n)]
    last: list[list[int]] = [[-1] * n for _ in range(n)]
    for c in word:
        last_c = last[c]
        for d in range(n):
            if d == c:
                continue
            if last_c[d] == c:
                alternating[c][d] = False
                alternating[d][c] = False
            last_c[d] = c
            last[d][c] = c
    return alternating


def alternation_graph(word: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """The graph a word defines: letters as vertices, edges between alternating pairs.

    Letters are relabeled to 0..k-1 in sorted order; the letter -> vertex map
    is returned alongside the graph.
    """
    if not word:
        raise ValueError("the empty word defines no graph")
    alphabet = sorted(set(word))
    relabel = {letter: i for i, letter in enumerate(alphabet)}
    n = len(alphabet)
    mapped = [relabel[c] for c in word]
    table = _alternating_pairs(mapped, n)
    occurring = set(mapped)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if table[u][v] and u in occurring and v in occurring
    ]
    return make_graph(n, edges), relabel


def represents(word: Sequence[int], g: Graph) -> bool:
    """True iff the word's alternation graph is exactly ``g``.

    The word's alphabet must equal the vertex set of ``g``.
    """
    alphabet = set(word)
    if alphabet != set(range(g.n)):
        raise ValueError(
            f"alphabet {sorted(alphabet)} does not match vertex set 0..{g.n - 1}"
        )
    table = _alternating_pairs(word, g.n)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if table[u][v] != bool(g.adj[u] >> v & 1):
                return False
    return True


def uniformity(word: Sequence[int]) -> UniformityProfile:
    """Occurrence counts, plus the common count when the word is uniform."""
    counts = dict(Counter(word))
    ks = set(counts.values())
    return UniformityProfile(counts, ks.pop() if len(ks) == 1 else None)


def concat_permutations(perms: Sequence[Sequence[int]]) -> Word:
    """Concatenate permutations of one common alphabet into a uniform word."""
    if not perms:
        raise ValueError("need at least one permutation")
    alphabet = set(perms[0])
    for p in perms:
        if len(p) != len(set(p)):
            raise ValueError(f"{tuple(p)} is not a permutation (repeated letter)")
        if set(p) != alphabet:
            raise ValueError(
                f"alphabet mismatch: {sorted(set(p))} vs {sorted(alphabet)}"
            )
    return tuple(c for p in perms for c in p)


def word_to_text(word: Sequence[int]) -> str:
    """Render a word as space-separated decimal vertex labels."""
    return " ".join(str(c) for c in word)


def word_from_text(text: str) -> Word:
    """Parse the space-separated text form of a word."""
    parts = text.split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"malformed word text {text!r}") from exc
