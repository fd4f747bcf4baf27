from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional
import networkx as nx
from ..exceptions import BadVertexId
from ..exceptions import LoopEdge
from ..exceptions import NonSimple
from ..exceptions import UnknownVertex
from ..util import is_vertex_id, edge_key, sorted_edges

VertexId = str
Hyperedge = FrozenSet[VertexId]


@dataclass(frozen=True)
class Hypergraph:
    """A vertex set plus a family of hyperedges.

    Construction only normalizes the containers to frozensets; use
    `validate()` to check the invariants (no loops, simple, every member
    a known vertex). Isolated vertices are allowed.
    """

    vertices: FrozenSet[VertexId]
    edges: FrozenSet[Hyperedge]

    def __post_init__(self):
        object.__setattr__(self, 'vertices', frozenset(self.vertices))
        object.__setattr__(
            self, 'edges', frozenset(frozenset(e) for e in self.edges))

    @classmethod
    def from_edges(
            cls,
            edges: Iterable[Iterable[VertexId]],
            isolated: Iterable[VertexId] = ()) -> 'Hypergraph':
        edges = [frozenset(e) for e in edges]
        vertices = set(isolated)
        for e in edges:
            vertices.update(e)
        return cls(vertices, edges)

    def sorted_edges(self):
        return sorted_edges(self.edges)

    def degree(self, v: VertexId) -> int:
        return sum(1 for e in self.edges if v in e)

    def edges_at(self, v: VertexId):
        return [e for e in self.sorted_edges() if v in e]

    def __repr__(self) -> str:
        edges = ', '.join(
            '{' + ','.join(edge_key(e)) + '}' for e in self.sorted_edges())
        return f'<Hypergraph n={len(self.vertices)} edges=[{edges}]>'


@dataclass(frozen=True)
class StructureReport:
    degree: Dict[VertexId, int]
    max_degree: int
    rank: Optional[int]
    anti_rank: Optional[int]
    is_linear: bool
    is_connected: bool
    edge_degree: Dict[Hyperedge, int]
    twigs: FrozenSet[Hyperedge]
    trunks: FrozenSet[Hyperedge]
    buds: FrozenSet[VertexId]
    isolated: FrozenSet[VertexId]
    edge_count: int = field(default=0)

    def max_degree_vertex(self) -> Optional[VertexId]:
        """Smallest vertex attaining the maximum degree."""
        for v in sorted(self.degree):
            if self.degree[v] == self.max_degree:
                return v
        return None

    def to_dict(self) -> dict:
        return {
            'vertices': len(self.degree),
            'edges': self.edge_count,
            'degree': {v: self.degree[v] for v in sorted(self.degree)},
            'max_degree': self.max_degree,
            'rank': self.rank,
            'anti_rank': self.anti_rank,
            'is_linear': self.is_linear,
            'is_connected': self.is_connected,
            'edge_degree': [
                [list(edge_key(e)), self.edge_degree[e]]
                for e in sorted_edges(self.edge_degree)],
            'twigs': [list(edge_key(e)) for e in sorted_edges(self.twigs)],
            'trunks': [list(edge_key(e)) for e in sorted_edges(self.trunks)],
            'buds': sorted(self.buds),
            'isolated': sorted(self.isolated),
        }


def _check_members(raw: Hypergraph):
    for v in sorted(raw.vertices):
        if not is_vertex_id(v):
            raise BadVertexId(v)
    for e in raw.sorted_edges():
        if len(e) < 2:
            raise LoopEdge(e)
        for v in sorted(e):
            if v not in raw.vertices:
                raise UnknownVertex(e, v)


def _check_simple(raw: Hypergraph):
    edges = sorted(raw.edges, key=lambda e: (len(e), edge_key(e)))
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if len(e) < len(f) and e < f:
                raise NonSimple(e, f)


def incidence_graph(h: Hypergraph) -> nx.Graph:
    """Bipartite vertex/hyperedge incidence graph of `h`.

    Vertex nodes are `('v', name)`, hyperedge nodes `('e', edge_key)`.
    """
    g = nx.Graph()
    g.add_nodes_from(('v', v) for v in h.vertices)
    for e in h.edges:
        node = ('e', edge_key(e))
        g.add_node(node)
        g.add_edges_from((node, ('v', v)) for v in e)
    return g


def validate(raw: Hypergraph) -> StructureReport:
    """Validate a hypergraph and compute its structure report.

    Raises:
        BadVertexId: a vertex is not a valid token.
        LoopEdge: a hyperedge with fewer than two vertices.
        UnknownVertex: a hyperedge member missing from the vertex set.
        NonSimple: a hyperedge contained in a distinct hyperedge.
    """
    _check_members(raw)
    _check_simple(raw)

    degree = {v: 0 for v in raw.vertices}
    for e in raw.edges:
        for v in e:
            degree[v] += 1

    edges = raw.sorted_edges()
    edge_degree = {e: 0 for e in edges}
    is_linear = True
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            common = len(e & f)
            if common:
                edge_degree[e] += 1
                edge_degree[f] += 1
            if common > 1:
                is_linear = False

    sizes = [len(e) for e in edges]
    is_connected = len(raw.vertices) <= 1 or \
        nx.is_connected(incidence_graph(raw))

    # an edge meeting no other edge counts as a twig
    twigs = frozenset(e for e, d in edge_degree.items() if d <= 1)
    return StructureReport(
        degree=degree,
        max_degree=max(degree.values(), default=0),
        rank=max(sizes) if sizes else None,
        anti_rank=min(sizes) if sizes else None,
        is_linear=is_linear,
        is_connected=is_connected,
        edge_degree=edge_degree,
        twigs=twigs,
        trunks=frozenset(edge_degree) - twigs,
        buds=frozenset(v for v, d in degree.items() if d == 1),
        isolated=frozenset(v for v, d in degree.items() if d == 0),
        edge_count=len(edges),
    )


def is_uniform(h: Hypergraph) -> bool:
    return len({len(e) for e in h.edges}) == 1


def transpose_vertices(h: Hypergraph, u: VertexId, x: VertexId):
    """Exchange the names of `u` and `x` throughout `h`."""
    swap = {u: x, x: u}
    return Hypergraph(
        (swap.get(v, v) for v in h.vertices),
        (frozenset(swap.get(v, v) for v in e) for e in h.edges))
