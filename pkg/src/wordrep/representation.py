"""Representation numbers, permutation representations, and composed certificates.

``rep_number`` does exhaustive search over k-uniform words for k = 1, 2, ...
The search appends one letter at a time and cuts a branch as soon as it is
unfinishable:

* appending a letter that doubles up against an adjacent letter is illegal
  (adjacent pairs must alternate to the end);
* after appending c, every neighbor d must have a remaining count equal to
  c's or one more, otherwise their projections cannot interleave;
* a non-adjacent pair that still alternates must keep some way to collide
  later, otherwise the word would create an edge that is not in the graph.

All three cuts reject only unfinishable prefixes, so the search remains
exhaustive; the test suite checks it against an unpruned enumeration on
small graphs. ``prn`` goes through the induced poset: a smallest realizer
by linear extensions, concatenated, is a minimal permutation representation.
Every returned representation re-verifies against its target on
construction, so a bug in a construction cannot silently produce a wrong
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceeded, DomainError
from .graphs import Graph, iter_bits
from .modular import lex_product, substitute
from .orientations import (
    DEFAULT_ORACLE_EDGE_CAP,
    exists_semi_transitive_orientation,
    find_transitive_orientation,
    minimum_realizer,
    poset_of,
)
from .words import Word, concat_permutations, represents, uniformity

DEFAULT_WORD_CAP = 4

GENERAL = "general"
PERMUTATIONAL = "permutational"


@dataclass(frozen=True)
class Representation:
    """A verified representing word for ``target``.

    ``k`` is the uniform multiplicity (None for non-uniform words); in
    permutational mode the word must split into k permutations of the
    vertex set. Construction re-checks everything.
    """

    word: Word
    k: int | None
    mode: str
    target: Graph

    def __post_init__(self) -> None:
        if self.mode not in (GENERAL, PERMUTATIONAL):
            raise ValueError(f"unknown representation mode {self.mode!r}")
        if not represents(self.word, self.target):
            raise ValueError("word does not represent the target graph")
        profile = uniformity(self.word)
        if self.k is not None and profile.uniform_k != self.k:
            raise ValueError(
                f"word is not {self.k}-uniform (profile {profile.counts})"
            )
        if self.mode == PERMUTATIONAL:
            if self.k is None:
                raise ValueError("permutational representations must be uniform")
            for p in self.permutations():
                if len(set(p)) != self.target.n:
                    raise ValueError(f"chunk {p} is not a permutation of the vertices")

    def permutations(self) -> list[Word]:
        """The word split into its k consecutive length-n chunks."""
        n = self.target.n
        assert self.k is not None and len(self.word) == self.k * n
        return [self.word[i * n : (i + 1) * n] for i in range(self.k)]


def representing_words(g: Graph, k: int) -> Iterator[Word]:
    """Yield every k-uniform word representing g, in lexicographic order."""
    n = g.n
    if n < 1:
        raise ValueError("representation search needs at least one vertex")
    if k < 1:
        raise ValueError(f"uniformity must be >= 1, got {k}")
    adj = g.adj
    full = (1 << n) - 1
    nonadj = [full & ~adj[c] & ~(1 << c) for c in range(n)]
    remaining = [k] * n
    pending = [0] * n  # bit d of pending[c]: pair (c,d) last saw c
    violated = [0] * n  # symmetric: non-adjacent pairs that already collided
    word: list[int] = []
    total = n * k

    def dfs(pos: int) -> Iterator[Word]:
        if pos == total:
            if all(violated[c] == nonadj[c] for c in range(n)):
                yield tuple(word)
            return
        for c in range(n):
            rc = remaining[c] - 1
            if rc < 0:
                continue
            dead = pending[c]
            if dead & adj[c]:
                continue
            ok = True
            for d in iter_bits(adj[c]):
                if not rc <= remaining[d] <= rc + 1:
                    ok = False
                    break
            if not ok:
                continue
            newly = dead & nonadj[c] & ~violated[c]
            if rc == 0:
                alive = nonadj[c] & ~violated[c] & ~newly
                for d in iter_bits(alive):
                    if remaining[d] < 2:
                        ok = False
                        break
                if not ok:
                    continue
            # apply the append
            remaining[c] = rc
            word.append(c)
            flipped = [d for d in range(n) if pending[d] >> c & 1]
            for d in flipped:
                pending[d] &= ~(1 << c)
            old_pending_c = pending[c]
            pending[c] = full ^ (1 << c)
            violated[c] |= newly
            for d in iter_bits(newly):
                violated[d] |= 1 << c
            yield from dfs(pos + 1)
            # undo
            for d in iter_bits(newly):
                violated[d] &= ~(1 << c)
            violated[c] &= ~newly
            pending[c] = old_pending_c
            for d in flipped:
                pending[d] |= 1 << c
            word.pop()
            remaining[c] = rc + 1

    return dfs(0)


def rep_number(g: Graph, cap: int = DEFAULT_WORD_CAP) -> Representation | None:
    """The minimal k <= cap with a k-uniform representing word, as a certificate.

    None means no representation within the cap; that never asserts
    non-word-representability (the orientation oracle decides that).
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    for k in range(1, cap + 1):
        found = next(representing_words(g, k), None)
        if found is not None:
            return Representation(found, k, GENERAL, g)
    return None


def prn(g: Graph, cap: int = DEFAULT_WORD_CAP) -> Representation | None:
    """Minimal concatenation of permutations representing g.

    None when g has no transitive orientation (not a comparability graph)
    or when the required number of permutations exceeds the cap. The count
    equals the order dimension of the induced poset; the realizer's linear
    extensions, concatenated, are the certificate.
    """
    o = find_transitive_orientation(g)
    if o is None:
        return None
    realizer = minimum_realizer(poset_of(o), cap)
    if realizer is None:
        return None
    word = concat_permutations(realizer)
    return Representation(word, len(realizer), PERMUTATIONAL, g)


def uniformize(word: Word, g: Graph, t: int) -> Word:
    """Extend a uniform representing word to t-uniform, preserving the graph.

    Each round appends one permutation of the vertices ordered by earliest
    last occurrence: adjacent pairs pick up one more alternation, pairs that
    already failed stay failed.
    """
    profile = uniformity(word)
    k = profile.uniform_k
    if k is None:
        raise ValueError("only uniform words can be extended uniformly")
    if t < k:
        raise ValueError(f"cannot shrink a {k}-uniform word to {t}")
    w = tuple(word)
    for _ in range(t - k):
        last = {c: i for i, c in enumerate(w)}
        w = w + tuple(sorted(range(g.n), key=lambda c: last[c]))
        if not represents(w, g):
            raise AssertionError("uniform extension changed the represented graph")
    return w


def _padded_permutations(rep: Representation, t: int) -> list[Word]:
    """The representation's permutations, repeated at the tail up to t blocks."""
    perms = rep.permutations()
    return perms + [perms[-1]] * (t - len(perms))


@dataclass(frozen=True)
class SubstitutionPlan:
    """Inputs for building a word for the graph 'outer with pivot replaced by inner'."""

    outer: Representation
    pivot: int
    inner: Representation


def substitute_representation(plan: SubstitutionPlan) -> Representation:
    """Build a representation of substitute(outer, pivot, inner) from the parts.

    Both sides are padded to t = max of the two multiplicities, then the
    i-th occurrence of the pivot letter is replaced by the inner side's i-th
    permutation, relabeled into the substituted graph. If the outer word is
    permutational the result is permutational.
    """
    outer, inner = plan.outer, plan.inner
    if inner.mode != PERMUTATIONAL:
        raise ValueError("the inner representation must be permutational")
    if outer.k is None:
        raise ValueError("the outer word must be uniform")
    g = outer.target
    if not 0 <= plan.pivot < g.n:
        raise ValueError(f"pivot {plan.pivot} not in 0..{g.n - 1}")
    t = max(outer.k, inner.k)
    inner_perms = _padded_permutations(inner, t)
    if outer.mode == PERMUTATIONAL:
        outer_word: Word = tuple(
            c for p in _padded_permutations(outer, t) for c in p
        )
    else:
        outer_word = uniformize(outer.word, g, t)
    result, g_map, m_map = substitute(g, plan.pivot, inner.target)
    out: list[int] = []
    seen_pivot = 0
    for c in outer_word:
        if c == plan.pivot:
            out.extend(m_map[x] for x in inner_perms[seen_pivot])
            seen_pivot += 1
        else:
            out.append(g_map[c])
    return Representation(tuple(out), t, outer.mode, result)


def _is_word_representable(g: Graph, edge_cap: int) -> bool:
    # comparability implies word-representable, and the orientation search
    # for a transitive orientation is much cheaper than full enumeration
    if find_transitive_orientation(g) is not None:
        return True
    return exists_semi_transitive_orientation(g, edge_cap)


def rep_number_composed(
    g: Graph,
    pivot: int,
    inner: Graph,
    cap: int = DEFAULT_WORD_CAP,
    oracle_edge_cap: int = DEFAULT_ORACLE_EDGE_CAP,
) -> Representation:
    """Representation of the substitution at max(R(outer), prn(inner)) multiplicity.

    Requires the outer graph to be word-representable and the inner graph to
    be a comparability graph; those are exactly the conditions under which
    the substituted graph is word-representable at all.
    """
    if find_transitive_orientation(inner) is None:
        raise DomainError(
            "inner graph admits no transitive orientation, so the substituted "
            "graph is not word-representable"
        )
    if not _is_word_representable(g, oracle_edge_cap):
        raise DomainError("outer graph is not word-representable")
    outer_rep = rep_number(g, cap)
    inner_rep = prn(inner, cap)
    if outer_rep is None or inner_rep is None:
        raise CapExceeded(f"representation search capped at k={cap}")
    rep = substitute_representation(SubstitutionPlan(outer_rep, pivot, inner_rep))
    assert rep.k == max(outer_rep.k, inner_rep.k)
    return rep


def prn_composed(
    g: Graph, pivot: int, inner: Graph, cap: int = DEFAULT_WORD_CAP
) -> Representation:
    """Permutational representation of the substitution at max of the two prns."""
    outer_rep = prn(g, cap)
    if outer_rep is None and find_transitive_orientation(g) is None:
        raise DomainError("outer graph is not a comparability graph")
    inner_rep = prn(inner, cap)
    if inner_rep is None and find_transitive_orientation(inner) is None:
        raise DomainError("inner graph is not a comparability graph")
    if outer_rep is None or inner_rep is None:
        raise CapExceeded(f"realizer search capped at k={cap}")
    rep = substitute_representation(SubstitutionPlan(outer_rep, pivot, inner_rep))
    assert rep.k == max(outer_rep.k, inner_rep.k)
    return rep


def lex_rep_number(
    g: Graph,
    h: Graph,
    cap: int = DEFAULT_WORD_CAP,
    oracle_edge_cap: int = DEFAULT_ORACLE_EDGE_CAP,
) -> Representation:
    """Representation of the lex product at max(R(g), prn(h)) multiplicity.

    The product is word-representable iff g is and h is a comparability
    graph; the word substitutes h's permutations for every letter of a
    uniform word for g.
    """
    if find_transitive_orientation(h) is None:
        raise DomainError(
            "second factor admits no transitive orientation, so the product "
            "is not word-representable"
        )
    if not _is_word_representable(g, oracle_edge_cap):
        raise DomainError("first factor is not word-representable")
    g_rep = rep_number(g, cap)
    h_rep = prn(h, cap)
    if g_rep is None or h_rep is None:
        raise CapExceeded(f"representation search capped at k={cap}")
    t = max(g_rep.k, h_rep.k)
    outer_word = uniformize(g_rep.word, g, t)
    h_perms = _padded_permutations(h_rep, t)
    product, label = lex_product(g, h)
    occurrences = [0] * g.n
    out: list[int] = []
    for c in outer_word:
        p = h_perms[occurrences[c]]
        occurrences[c] += 1
        out.extend(label[(c, x)] for x in p)
    rep = Representation(tuple(out), t, GENERAL, product)
    assert rep.k == max(g_rep.k, h_rep.k)
    return rep


def lex_prn(g: Graph, h: Graph, cap: int = DEFAULT_WORD_CAP) -> Representation:
    """Permutational representation of the lex product at max of the two prns."""
    g_rep = prn(g, cap)
    if g_rep is None and find_transitive_orientation(g) is None:
        raise DomainError("first factor is not a comparability graph")
    h_rep = prn(h, cap)
    if h_rep is None and find_transitive_orientation(h) is None:
        raise DomainError("second factor is not a comparability graph")
    if g_rep is None or h_rep is None:
        raise CapExceeded(f"realizer search capped at k={cap}")
    t = max(g_rep.k, h_rep.k)
    g_perms = _padded_permutations(g_rep, t)
    h_perms = _padded_permutations(h_rep, t)
    product, label = lex_product(g, h)
    chunks: list[int] = []
    for i in range(t):
        chunks.extend(label[(c, x)] for c in g_perms[i] for x in h_perms[i])
    rep = Representation(tuple(chunks), t, PERMUTATIONAL, product)
    assert rep.k == max(g_rep.k, h_rep.k)
    return rep
