import logging
from typing import AbstractSet, Optional, Set
from .trace import BaseBranch, ConstructionTrace, TwoEdge
from ..digraph import Arc, Digraph, is_good_digraph
from ..exceptions import DegenerateBranch
from ..exceptions import NotInT
from ..exceptions import TooSmall
from ..exceptions import VerificationError
from ..hypergraph import Branch, Hypergraph, Hyperedge, VertexId
from ..hypergraph import classify_t
from ..util import edge_key


def _pick(candidates, reserved: AbstractSet[VertexId]) -> VertexId:
    """Smallest non-reserved candidate, else the smallest candidate."""
    free = sorted(v for v in candidates if v not in reserved)
    return free[0] if free else min(candidates)


def base_branch_roles(
        branch: Branch,
        reserved: AbstractSet[VertexId] = frozenset()) -> BaseBranch:
    """Assign the vertex roles of a single-trunk hypertree.

    Twigs are ordered lexicographically, except that twigs whose buds are
    all reserved go last. Only the end bud of twigs e_1 .. e_{l-2} ends up
    with both neighbourhoods non-empty, so it is taken from the
    non-reserved buds whenever there is one.

    Raises:
        DegenerateBranch: the branch has fewer than two twigs.
    """
    twigs = list(branch.twigs)
    if len(twigs) <= 1:
        raise DegenerateBranch(
            f'branch at trunk {list(edge_key(branch.trunk))} has '
            f'{len(twigs)} twig(s), at least two are required')

    trunk = branch.trunk

    def buds_of(t):
        return t - trunk

    def exhausted(t):
        return all(v in reserved for v in buds_of(t))

    twigs.sort(key=lambda t: (exhausted(t), edge_key(t)))
    l = len(twigs)
    shared = tuple(min(t & trunk) for t in twigs)

    first = buds_of(twigs[0])
    # leave a non-reserved bud for the end role of e_1 when it is both-sided
    candidates = first
    if l >= 3 and not exhausted(twigs[0]):
        candidates = {
            v for v in first
            if any(w not in reserved for w in first - {v})} or first
    source = min(candidates)

    ends = []
    for i, t in enumerate(twigs):
        buds = buds_of(t) - {source} if i == 0 else buds_of(t)
        ends.append(_pick(buds, reserved))

    return BaseBranch(
        trunk=edge_key(trunk),
        twigs=tuple(edge_key(t) for t in twigs),
        shared=shared,
        source=source,
        ends=tuple(ends))


def base_branch_arcs(step: BaseBranch) -> Set[Arc]:
    twigs = step.twigs
    l = len(twigs)
    arcs = {(step.source, v) for v in step.trunk}
    arcs.update((step.shared[0], v) for v in twigs[l - 1])
    arcs.update((v, step.shared[l - 1]) for v in twigs[0])
    for i in range(1, l - 1):
        arcs.update((v, step.ends[i - 1]) for v in twigs[i])
    return arcs


def _verify(d: Digraph, h: Hypergraph, trace: Optional[ConstructionTrace]):
    report = is_good_digraph(d, h)
    if not report:
        raise VerificationError(report.violations, trace=trace)


def base_branch_digraph(
        branch: Branch,
        reserved: AbstractSet[VertexId] = frozenset(),
        trace: Optional[ConstructionTrace] = None) -> Digraph:
    """Good digraph of a hypertree with exactly one trunk.

    With trunk e and twigs e_1 .. e_l, the source bud s of e_1 points at
    the whole trunk, the shared vertex of e_1 points at e_l, e_1 points at
    the shared vertex of e_l, and each e_i (1 < i < l) points at the end
    bud of e_{i-1}.

    Args:
        branch (Branch):
            Trunk plus twigs; the attachment is ignored.
        reserved (set, optional):
            Buds which should stay free of the both-sided role.
        trace (ConstructionTrace, optional):
            The chosen roles are appended as a `base_branch` step.

    Returns:
        Digraph: verified good digraph of the branch.

    Raises:
        DegenerateBranch: fewer than two twigs.
        NotInT: the branch on its own is not in class T.
        VerificationError: the result failed verification.
    """
    step = base_branch_roles(branch, reserved)
    h = branch.hypergraph()
    membership = classify_t(h)
    if not membership.in_t:
        raise NotInT(membership)
    if trace is not None:
        trace.append(step)

    logging.debug(
        f'base branch at trunk {list(step.trunk)}: source {step.source}, '
        f'{len(step.twigs)} twigs')

    d = Digraph.from_arcs(base_branch_arcs(step), vertices=h.vertices)
    _verify(d, h, trace)
    return d


def two_edge_roles(e: Hyperedge, f: Hyperedge, shared: VertexId) -> TwoEdge:
    for edge in (e, f):
        if len(edge) < 3:
            raise TooSmall(
                f'hyperedge {list(edge_key(edge))} has {len(edge)} '
                f'vertices, at least three are required')
    if e & f != {shared}:
        raise DegenerateBranch(
            f'{list(edge_key(e))} and {list(edge_key(f))} must meet in '
            f'exactly {shared!r}')
    return TwoEdge(
        e=edge_key(e),
        f=edge_key(f),
        shared=shared,
        source=min(e - {shared}),
        sink=min(f - {shared}))


def two_edge_arcs(step: TwoEdge) -> Set[Arc]:
    arcs = {(w, step.sink) for w in step.e}
    arcs.update((step.source, w) for w in step.f if w != step.sink)
    arcs.add((step.source, step.sink))
    return arcs


def two_edge_digraph(
        e: Hyperedge,
        f: Hyperedge,
        shared: VertexId,
        trace: Optional[ConstructionTrace] = None) -> Digraph:
    """Good digraph of two hyperedges meeting in `shared`.

    The smallest bud z of f collects all of e and the smallest bud x of e
    points at all of f, so N-(z) = e and N+(x) = f.

    Raises:
        TooSmall: a hyperedge has fewer than three vertices.
        DegenerateBranch: `e` and `f` do not meet in exactly `shared`.
        VerificationError: the result failed verification.
    """
    e, f = frozenset(e), frozenset(f)
    step = two_edge_roles(e, f, shared)
    if trace is not None:
        trace.append(step)
    logging.debug(
        f'two-edge construction at {shared}: source {step.source}, '
        f'sink {step.sink}')
    h = Hypergraph.from_edges([e, f])
    d = Digraph.from_arcs(two_edge_arcs(step), vertices=h.vertices)
    _verify(d, h, trace)
    return d
