import enum
import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple
import networkx as nx
from .hypergraph import Hypergraph, Hyperedge, VertexId, validate
from ..exceptions import NoTrunk, NotInT, UnknownEdge
from ..util import edge_key, sorted_edges


class Criterion(enum.Enum):
    """Clauses of the class-T test, in the order they are checked."""
    EDGE_COUNT = 'edge_count'
    ISOLATED = 'isolated'
    CONNECTED = 'connected'
    ANTI_RANK = 'anti_rank'
    LINEAR = 'linear'
    MAX_DEGREE = 'max_degree'
    HYPERTREE = 'hypertree'


@dataclass(frozen=True)
class Membership:
    in_t: bool
    reason: str = ''
    criterion: Optional[Criterion] = None
    witness: Any = None

    @property
    def verdict(self) -> str:
        return 'IN_T' if self.in_t else 'NOT_IN_T'

    def __str__(self) -> str:
        if self.in_t:
            return self.verdict
        return f'{self.verdict}: {self.reason}'


@dataclass(frozen=True)
class Branch:
    """A trunk with the twigs meeting it.

    The attachment is the vertex where the trunk meets the rest of the
    hypertree; it is only set for the removable branch.
    """
    trunk: Hyperedge
    twigs: Tuple[Hyperedge, ...]
    attachment: Optional[VertexId] = None

    @property
    def edges(self) -> List[Hyperedge]:
        return [self.trunk, *self.twigs]

    def hypergraph(self) -> Hypergraph:
        return Hypergraph.from_edges(self.edges)


@dataclass(frozen=True)
class BranchDecomposition:
    branches: Tuple[Branch, ...]
    removable: Branch
    twigs: Tuple[Hyperedge, ...]

    @property
    def is_base(self) -> bool:
        return self.removable.attachment is None


def line_graph(h: Hypergraph) -> nx.Graph:
    """Edge-intersection graph; nodes are the edge keys of `h`."""
    g = nx.Graph()
    edges = h.sorted_edges()
    g.add_nodes_from(edge_key(e) for e in edges)
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if e & f:
                g.add_edge(edge_key(e), edge_key(f))
    return g


def classify_t(h: Hypergraph) -> Membership:
    """Decide membership in class T.

    T holds the connected linear hypertrees without isolated vertices,
    with maximum degree two and every hyperedge of size three or more.
    The hypertree clause is tested on the line graph, which must be a
    tree. The first violated clause is returned with a witness.
    """
    report = validate(h)

    if report.edge_count < 2:
        return Membership(
            False,
            f'needs at least two hyperedges, has {report.edge_count}',
            Criterion.EDGE_COUNT,
            report.edge_count)

    if report.isolated:
        v = min(report.isolated)
        return Membership(
            False, f'isolated vertex {v}', Criterion.ISOLATED, v)

    if not report.is_connected:
        comps = sorted(
            sorted(c) for c in nx.connected_components(line_graph(h)))
        return Membership(
            False,
            f'not connected ({len(comps)} components)',
            Criterion.CONNECTED,
            comps)

    if report.anti_rank < 3:
        e = next(e for e in h.sorted_edges() if len(e) < 3)
        return Membership(
            False,
            f'anti-rank {report.anti_rank} < 3 at {list(edge_key(e))}',
            Criterion.ANTI_RANK,
            list(edge_key(e)))

    if not report.is_linear:
        edges = h.sorted_edges()
        pair = next(
            (e, f) for i, e in enumerate(edges)
            for f in edges[i + 1:] if len(e & f) > 1)
        return Membership(
            False,
            f'not linear: {list(edge_key(pair[0]))} and '
            f'{list(edge_key(pair[1]))} share {sorted(pair[0] & pair[1])}',
            Criterion.LINEAR,
            [list(edge_key(e)) for e in pair])

    if report.max_degree != 2:
        v = report.max_degree_vertex()
        return Membership(
            False,
            f'Δ={report.max_degree} at {v}',
            Criterion.MAX_DEGREE,
            v)

    lg = line_graph(h)
    if not nx.is_tree(lg):
        cycle = [list(a) for a, _ in nx.find_cycle(lg)]
        return Membership(
            False,
            f'not a hypertree: line graph has a cycle through '
            f'{len(cycle)} hyperedges',
            Criterion.HYPERTREE,
            cycle)

    return Membership(True)


def host_tree(h: Hypergraph) -> nx.Graph:
    """Host-tree witness for a linear hypergraph whose line graph is a tree.

    The line graph is rooted at the smallest edge; each edge hangs its
    vertices as a path starting from its entry vertex (the vertex shared
    with its parent, or its smallest vertex for the root).
    """
    tree = nx.Graph()
    tree.add_nodes_from(h.vertices)
    lg = line_graph(h)
    if not lg:
        return tree
    root = min(lg)
    for parent, child in [(None, root), *nx.bfs_edges(lg, root)]:
        members = set(child)
        if parent is None:
            entry = min(members)
        else:
            entry, = members & set(parent)
        nx.add_path(tree, [entry, *sorted(members - {entry})])
    return tree


def check_host_tree(h: Hypergraph, tree: nx.Graph) -> bool:
    if set(tree.nodes) != set(h.vertices) or not nx.is_tree(tree):
        return False
    return all(nx.is_connected(tree.subgraph(e)) for e in h.edges)


def _twigs_meeting(trunk, twigs):
    return tuple(sorted_edges(t for t in twigs if t & trunk))


def branch_decomposition(h: Hypergraph) -> BranchDecomposition:
    """Split a member of T into its branches.

    The removable branch is picked as in the induction step: drop all
    twigs, take the smallest twig `e` of what remains; `e` with its twigs
    is a branch whose removal keeps the hypertree connected. When only
    one trunk exists the single branch is the whole hypertree and has no
    attachment.

    Raises:
        NotInT: `h` is not in class T.
        NoTrunk: `h` consists of two twigs.
    """
    membership = classify_t(h)
    if not membership.in_t:
        raise NotInT(membership)

    report = validate(h)
    twigs = sorted_edges(report.twigs)
    trunks = sorted_edges(report.trunks)
    if not trunks:
        raise NoTrunk(tuple(twigs))

    branches = tuple(
        Branch(trunk, _twigs_meeting(trunk, twigs)) for trunk in trunks)

    if len(trunks) == 1:
        return BranchDecomposition(branches, branches[0], tuple(twigs))

    rest = Hypergraph.from_edges(trunks)
    rest_twigs = validate(rest).twigs
    e = min(rest_twigs, key=edge_key)
    f, = (g for g in trunks if g != e and g & e)
    u, = e & f
    own = _twigs_meeting(e, twigs)
    assert own, 'a leaf trunk must meet at least one twig'
    removable = Branch(e, own, u)
    logging.debug(
        f'removable branch at trunk {list(edge_key(e))} with '
        f'{len(own)} twig(s), attachment {u}')
    return BranchDecomposition(branches, removable, tuple(twigs))


def remove_branch(h: Hypergraph, branch: Branch) -> Hypergraph:
    """Remove the branch edges and the vertices left uncovered.

    Vertices isolated before the removal stay; the attachment vertex
    stays through the surviving trunk.

    Raises:
        UnknownEdge: a branch edge is not a hyperedge of `h`.
    """
    for e in branch.edges:
        if e not in h.edges:
            raise UnknownEdge(e)
    removed = set(branch.edges)
    edges = [e for e in h.edges if e not in removed]
    still = frozenset().union(*edges)
    dropped = frozenset().union(*removed) - still
    return Hypergraph(h.vertices - dropped, edges)
