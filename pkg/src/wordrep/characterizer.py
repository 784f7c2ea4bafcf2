"""The decision pipeline: decompose, test blocks for comparability, recurse on the quotient.

A connected graph is word-representable iff every block of a modular
partition induces a comparability graph and the quotient is
word-representable; when it is, the representation number is the max of the
quotient's representation number and the blocks' permutation-representation
numbers. A block that fails comparability is a checkable witness of
non-word-representability. Prime graphs (and complete graphs, whose
canonical partition is all singletons) are decided directly: transitive
orientation first, then bounded word search, then the semi-transitive
oracle; when caps prevent a decision the verdict honestly reduces to the
undecided quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CapExceeded, DomainError
from .graphs import Graph, induced_subgraph, is_connected
from .modular import (
    ModularPartition,
    induced_block_graphs,
    is_module,
    maximal_modular_partition,
)
from .orientations import (
    DEFAULT_ORACLE_EDGE_CAP,
    exists_semi_transitive_orientation,
    find_transitive_orientation,
)
from .representation import (
    DEFAULT_WORD_CAP,
    GENERAL,
    PERMUTATIONAL,
    Representation,
    _padded_permutations,
    prn,
    rep_number,
    uniformize,
)
from .words import represents, uniformity


class Status(Enum):
    WORD_REPRESENTABLE = "word-representable"
    COMPARABILITY = "comparability"
    NOT_WORD_REPRESENTABLE = "not-word-representable"
    REDUCED_TO_QUOTIENT = "reduced-to-quotient"


@dataclass(frozen=True)
class Caps:
    """Effective resource limits, echoed on every verdict."""

    word_cap: int = DEFAULT_WORD_CAP
    oracle_edge_cap: int = DEFAULT_ORACLE_EDGE_CAP


@dataclass(frozen=True)
class Verdict:
    """Outcome of classify, with whatever certificate backs it.

    For word-representable outcomes ``certificate`` is a verified word at
    multiplicity ``r_number``; comparability outcomes additionally carry a
    permutational certificate at ``prn_number``. For
    not-word-representable outcomes ``witness`` is a nontrivial module
    inducing a non-comparability subgraph when one exists (prime graphs
    refuted by the orientation oracle have no such module and carry None).
    """

    status: Status
    caps: Caps
    witness: frozenset[int] | None = None
    certificate: Representation | None = None
    perm_certificate: Representation | None = None
    r_number: int | None = None
    prn_number: int | None = None
    block_prns: tuple[int, ...] | None = None
    quotient_r: int | None = None
    quotient_ref: Graph | None = None


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def module_comparability_test(g: Graph) -> list[tuple[frozenset[int], bool]]:
    """For each block of the maximal modular partition, is its induced graph
    a comparability graph?

    Raises DomainError when the partition is all singletons (prime graphs,
    and complete graphs under the canonical partition), since then the test
    has nothing to say.
    """
    if not is_connected(g):
        raise ValueError("module comparability test needs a connected graph")
    partition = maximal_modular_partition(g)
    if all(len(b) == 1 for b in partition.blocks):
        raise DomainError("prime: no nontrivial modules in the maximal partition")
    out = []
    for block, bg in zip(partition.blocks, induced_block_graphs(partition)):
        out.append((block, find_transitive_orientation(bg) is not None))
    return out


def nonwr_screen(g: Graph) -> frozenset[int] | None:
    """Polynomial screen: a maximal-partition block inducing a non-comparability
    graph proves g is not word-representable.

    Returns the first such block, or None when the screen has no information
    (which never asserts word-representability).
    """
    if not is_connected(g):
        raise ValueError("the screen needs a connected graph")
    if g.n < 2:
        return None
    partition = maximal_modular_partition(g)
    for block, bg in zip(partition.blocks, induced_block_graphs(partition)):
        if len(block) >= 2 and find_transitive_orientation(bg) is None:
            return block
    return None


def _complete_verdict(g: Graph, caps: Caps) -> Verdict:
    word = tuple(range(g.n))
    rep = Representation(word, 1, PERMUTATIONAL, g)
    return Verdict(
        Status.COMPARABILITY,
        caps,
        certificate=rep,
        perm_certificate=rep,
        r_number=1,
        prn_number=1,
    )


def _classify_prime(g: Graph, caps: Caps) -> Verdict:
    if find_transitive_orientation(g) is not None:
        word_rep = rep_number(g, caps.word_cap)
        perm_rep = prn(g, caps.word_cap)
        if word_rep is None or perm_rep is None:
            return Verdict(Status.REDUCED_TO_QUOTIENT, caps, quotient_ref=g)
        return Verdict(
            Status.COMPARABILITY,
            caps,
            certificate=word_rep,
            perm_certificate=perm_rep,
            r_number=word_rep.k,
            prn_number=perm_rep.k,
        )
    # not comparability: settle the status with the orientation oracle before
    # paying for word search (refuting k-uniform words level by level is far
    # slower than refuting orientations), then search only to certify
    if g.m <= caps.oracle_edge_cap:
        if not exists_semi_transitive_orientation(g, caps.oracle_edge_cap):
            return Verdict(Status.NOT_WORD_REPRESENTABLE, caps, witness=None)
        word_rep = rep_number(g, caps.word_cap)
        if word_rep is None:
            # word-representable, but no word within the cap to certify it
            return Verdict(Status.REDUCED_TO_QUOTIENT, caps, quotient_ref=g)
        return Verdict(
            Status.WORD_REPRESENTABLE,
            caps,
            certificate=word_rep,
            r_number=word_rep.k,
        )
    word_rep = rep_number(g, caps.word_cap)
    if word_rep is not None:
        return Verdict(
            Status.WORD_REPRESENTABLE,
            caps,
            certificate=word_rep,
            r_number=word_rep.k,
        )
    return Verdict(Status.REDUCED_TO_QUOTIENT, caps, quotient_ref=g)


def _compose(
    partition: ModularPartition,
    quotient_rep: Representation,
    block_reps: list[Representation],
    t: int,
    permutational: bool,
) -> Representation:
    """Blow a quotient word up into a word for the base graph.

    The i-th occurrence of quotient letter q becomes block q's i-th
    permutation, relabeled onto the block's actual vertices.
    """
    if permutational:
        outer_word = tuple(
            c for p in _padded_permutations(quotient_rep, t) for c in p
        )
    else:
        outer_word = uniformize(quotient_rep.word, partition.quotient, t)
    perms = [_padded_permutations(rep, t) for rep in block_reps]
    members = [sorted(block) for block in partition.blocks]
    occurrences = [0] * partition.quotient.n
    out: list[int] = []
    for q in outer_word:
        p = perms[q][occurrences[q]]
        occurrences[q] += 1
        out.extend(members[q][x] for x in p)
    mode = PERMUTATIONAL if permutational else GENERAL
    return Representation(tuple(out), t, mode, partition.base)


def classify(g: Graph, caps: Caps = Caps()) -> Verdict:
    """Decide word-representability (and comparability) with a certificate.

    Recurses on the maximal modular partition; see the module docstring for
    the decision structure.
    """
    if g.n == 0:
        raise ValueError("classify needs a nonempty graph")
    if not is_connected(g):
        raise ValueError("classify is defined for connected graphs")
    if _is_complete(g):
        return _complete_verdict(g, caps)
    partition = maximal_modular_partition(g)
    if all(len(b) == 1 for b in partition.blocks):
        return _classify_prime(g, caps)

    block_reps: list[Representation] = []
    for block, bg in zip(partition.blocks, induced_block_graphs(partition)):
        if find_transitive_orientation(bg) is None:
            return Verdict(Status.NOT_WORD_REPRESENTABLE, caps, witness=block)
        rep = prn(bg, caps.word_cap)
        if rep is None:
            # comparability holds but the prn search is capped; report the
            # core quotient the structural walk reaches
            return Verdict(
                Status.REDUCED_TO_QUOTIENT, caps, quotient_ref=_reduction_target(g)
            )
        block_reps.append(rep)

    sub = classify(partition.quotient, caps)
    if sub.status == Status.NOT_WORD_REPRESENTABLE:
        lifted = None
        if sub.witness is not None:
            lifted = frozenset(
                v for i in sub.witness for v in partition.blocks[i]
            )
        return Verdict(Status.NOT_WORD_REPRESENTABLE, caps, witness=lifted)
    if sub.status == Status.REDUCED_TO_QUOTIENT:
        return Verdict(
            Status.REDUCED_TO_QUOTIENT, caps, quotient_ref=sub.quotient_ref
        )

    block_ks = tuple(rep.k for rep in block_reps)
    assert sub.r_number is not None and sub.certificate is not None
    r_total = max((sub.r_number, *block_ks))
    certificate = _compose(partition, sub.certificate, block_reps, r_total, False)
    if sub.status == Status.COMPARABILITY:
        assert sub.prn_number is not None and sub.perm_certificate is not None
        prn_total = max((sub.prn_number, *block_ks))
        perm_certificate = _compose(
            partition, sub.perm_certificate, block_reps, prn_total, True
        )
        return Verdict(
            Status.COMPARABILITY,
            caps,
            certificate=certificate,
            perm_certificate=perm_certificate,
            r_number=r_total,
            prn_number=prn_total,
            block_prns=block_ks,
            quotient_r=sub.r_number,
        )
    return Verdict(
        Status.WORD_REPRESENTABLE,
        caps,
        certificate=certificate,
        r_number=r_total,
        block_prns=block_ks,
        quotient_r=sub.r_number,
    )


def _reduction_target(g: Graph) -> Graph:
    """Follow the cap-free part of the pipeline down to the quotient that
    would have to be decided directly."""
    current = g
    while True:
        if _is_complete(current):
            return current
        partition = maximal_modular_partition(current)
        if all(len(b) == 1 for b in partition.blocks):
            return current
        for bg in induced_block_graphs(partition):
            if find_transitive_orientation(bg) is None:
                return current
        current = partition.quotient


def verify(
    verdict: Verdict, g: Graph, replay_edge_cap: int = DEFAULT_ORACLE_EDGE_CAP
) -> bool:
    """Replay a verdict's certificate against the graph it was issued for.

    Word certificates are re-checked with represents(); a
    non-word-representability witness is re-checked to be a nontrivial
    module whose induced subgraph admits no transitive orientation; a
    reduced verdict must name the quotient the pipeline actually reaches.
    Replays past the edge cap raise CapExceeded rather than guessing.
    """
    if verdict.status in (Status.WORD_REPRESENTABLE, Status.COMPARABILITY):
        cert = verdict.certificate
        if cert is None:
            return False
        try:
            if not represents(cert.word, g):
                return False
        except ValueError:
            return False
        if verdict.r_number is not None:
            if uniformity(cert.word).uniform_k != verdict.r_number:
                return False
        if verdict.status == Status.COMPARABILITY:
            pc = verdict.perm_certificate
            if pc is None or pc.mode != PERMUTATIONAL:
                return False
            try:
                if not represents(pc.word, g):
                    return False
            except ValueError:
                return False
            if verdict.prn_number is not None and pc.k != verdict.prn_number:
                return False
        return True
    if verdict.status == Status.NOT_WORD_REPRESENTABLE:
        if verdict.witness is not None:
            w = verdict.witness
            if not (2 <= len(w) < g.n):
                return False
            if not all(0 <= v < g.n for v in w):
                return False
            if not is_module(g, w):
                return False
            sub, _ = induced_subgraph(g, w)
            if sub.m > replay_edge_cap:
                raise CapExceeded(
                    f"witness replay: {sub.m} edges exceed cap {replay_edge_cap}"
                )
            return find_transitive_orientation(sub) is None
        if g.m > replay_edge_cap:
            raise CapExceeded(
                f"oracle replay: {g.m} edges exceed cap {replay_edge_cap}"
            )
        return not exists_semi_transitive_orientation(g, replay_edge_cap)
    if verdict.status == Status.REDUCED_TO_QUOTIENT:
        if verdict.quotient_ref is None:
            return False
        return _reduction_target(g) == verdict.quotient_ref
    return False
