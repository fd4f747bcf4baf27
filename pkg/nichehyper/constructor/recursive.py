import logging
from typing import AbstractSet, Optional, Tuple
from .base import base_branch_digraph, two_edge_digraph
from .trace import ConstructionTrace, Merge, RemoveBranch, Reverse, Swap
from .trace import Target
from ..digraph import Digraph, Side, is_good_digraph, neighborhood
from ..digraph import reverse, swap_neighborhoods, union
from ..exceptions import ConstructionError
from ..exceptions import NoSwapPartner
from ..exceptions import NotInT
from ..exceptions import UnknownVertex
from ..exceptions import VerificationError
from ..hypergraph import Hypergraph, VertexId
from ..hypergraph import branch_decomposition, classify_t, remove_branch
from ..hypergraph import validate
from ..util import edge_key


def free_side(
        d: Digraph,
        h: Hypergraph,
        u: VertexId,
        side: Side,
        reserved: AbstractSet[VertexId] = frozenset(),
        trace: Optional[ConstructionTrace] = None,
        target: Target = Target.BRANCH) -> Digraph:
    """Return a good digraph of `h` in which `side` of bud `u` is empty.

    Nothing changes when that side is already empty. When the other side
    is empty the whole digraph is reversed. Otherwise a second bud `x` of
    the hyperedge of `u` with an empty side takes over the neighbourhoods
    of `u`; the digraph is reversed first when needed so that the empty
    side of `x` is `side`.

    Args:
        d (Digraph):
            A good digraph of `h`.
        h (Hypergraph):
            The hypergraph realized by `d`.
        u (str):
            A bud of `h`.
        side (Side):
            The neighbourhood of `u` to empty.
        reserved (set, optional):
            Buds used as a swap partner only when no other bud qualifies.
        trace (ConstructionTrace, optional):
            Reverse and swap steps are appended here.
        target (Target, optional):
            Name of `d` in the trace steps. Defaults to `Target.BRANCH`.

    Returns:
        Digraph: verified good digraph of `h`.

    Raises:
        NoSwapPartner: no other bud of the hyperedge has an empty side.
        VerificationError: the result failed verification.
    """
    if u not in h.vertices:
        raise UnknownVertex(h.vertices, u)
    if u not in validate(h).buds:
        raise ConstructionError(f'{u!r} is not a bud', trace=trace)

    if not neighborhood(d, u, side):
        return d

    if not neighborhood(d, u, side.other):
        d = reverse(d)
        if trace is not None:
            trace.append(Reverse(target))
    else:
        g, = h.edges_at(u)
        buds = validate(h).buds
        partners = sorted(
            (x for x in g - {u} if x in buds and (
                not d.in_neighbors(x) or not d.out_neighbors(x))),
            key=lambda x: (x in reserved, x))
        if not partners:
            logging.error(
                f'no swap partner for {u} in {list(edge_key(g))} of {h!r}')
            raise NoSwapPartner(u, g, trace=trace)
        x = partners[0]
        if neighborhood(d, x, side):
            d = reverse(d)
            if trace is not None:
                trace.append(Reverse(target))
        d = swap_neighborhoods(d, u, x)
        if trace is not None:
            trace.append(Swap(target, u, x))
        logging.debug(f'swapped neighbourhoods of {u} and {x}')

    report = is_good_digraph(d, h)
    if not report or neighborhood(d, u, side):
        raise VerificationError(report.violations or [
            f'{side.value}-neighbourhood of {u} is not empty'], trace=trace)
    return d


def _construct(
        h: Hypergraph,
        reserved: AbstractSet[VertexId],
        trace: ConstructionTrace) -> Digraph:
    if len(h.edges) == 2:
        e, f = h.sorted_edges()
        shared, = e & f
        return two_edge_digraph(e, f, shared, trace=trace)

    decomposition = branch_decomposition(h)
    branch = decomposition.removable
    if decomposition.is_base:
        return base_branch_digraph(branch, reserved, trace=trace)

    u = branch.attachment
    trace.append(RemoveBranch(
        trunk=edge_key(branch.trunk),
        twigs=tuple(edge_key(t) for t in branch.twigs),
        attachment=u))
    logging.debug(
        f'removing branch at {list(edge_key(branch.trunk))}, '
        f'attachment {u}, {len(h.edges)} hyperedges left before removal')

    rest = remove_branch(h, branch)
    sub = branch.hypergraph()
    rest_reserved = (reserved & rest.vertices) | {u}
    sub_reserved = (reserved & sub.vertices) | {u}

    d_rest = _construct(rest, rest_reserved, trace)
    d_sub = _construct(sub, sub_reserved, trace)

    d_rest = free_side(
        d_rest, rest, u, Side.OUT, rest_reserved, trace, Target.REST)
    d_sub = free_side(
        d_sub, sub, u, Side.IN, sub_reserved, trace, Target.BRANCH)

    d = union(d_rest, d_sub, shared={u})
    trace.append(Merge(u))

    report = is_good_digraph(d, h)
    if not report:
        raise VerificationError(report.violations, trace=trace)
    return d


def construct_good_digraph(
        h: Hypergraph) -> Tuple[Digraph, ConstructionTrace]:
    """Build an acyclic digraph whose niche hypergraph is exactly `h`.

    Works by induction on the branches: a removable branch is cut off at
    its attachment `u`, both parts are realized recursively, the
    out-neighbourhood of `u` is emptied in the digraph of the remainder
    and its in-neighbourhood in the digraph of the branch, and the two are
    joined at `u`. No vertex is added, so V(D) = V(h).

    Returns:
        tuple: The verified digraph and the trace of the construction.

    Raises:
        NotInT: `h` is not in class T.
        NoSwapPartner: a neighbourhood could not be emptied.
        VerificationError: an intermediate or the final digraph failed
            verification.
    """
    membership = classify_t(h)
    if not membership.in_t:
        raise NotInT(membership)

    trace = ConstructionTrace()
    d = _construct(h, frozenset(), trace)
    logging.info(
        f'constructed good digraph of {h!r} with {len(d.arcs)} arcs in '
        f'{len(trace)} steps')
    return d, trace
