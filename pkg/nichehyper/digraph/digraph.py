from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
import networkx as nx
from ..exceptions import SameVertex
from ..exceptions import SelfArc
from ..exceptions import SharedVertexMismatch
from ..exceptions import TwoCycle
from ..exceptions import UnknownVertex
from ..hypergraph import VertexId

Arc = Tuple[VertexId, VertexId]


@dataclass(frozen=True)
class Digraph:
    """Vertices plus arcs; no self-arcs and no pair of opposite arcs."""

    vertices: FrozenSet[VertexId]
    arcs: FrozenSet[Arc]
    _in: Dict[VertexId, FrozenSet[VertexId]] = field(
        default=None, init=False, repr=False, compare=False)
    _out: Dict[VertexId, FrozenSet[VertexId]] = field(
        default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        arcs = frozenset((t, h) for t, h in self.arcs)
        ins = {v: set() for v in vertices}
        outs = {v: set() for v in vertices}
        for t, h in sorted(arcs):
            if t == h:
                raise SelfArc(t)
            for v in (t, h):
                if v not in vertices:
                    raise UnknownVertex((t, h), v)
            if (h, t) in arcs:
                raise TwoCycle(*sorted((t, h)))
            outs[t].add(h)
            ins[h].add(t)
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'arcs', arcs)
        object.__setattr__(
            self, '_in', {v: frozenset(s) for v, s in ins.items()})
        object.__setattr__(
            self, '_out', {v: frozenset(s) for v, s in outs.items()})

    @classmethod
    def from_arcs(
            cls,
            arcs: Iterable[Arc],
            vertices: Iterable[VertexId] = ()) -> 'Digraph':
        arcs = list(arcs)
        vertices = set(vertices)
        for t, h in arcs:
            vertices.add(t)
            vertices.add(h)
        return cls(vertices, arcs)

    def in_neighbors(self, v: VertexId) -> FrozenSet[VertexId]:
        return self._in[v]

    def out_neighbors(self, v: VertexId) -> FrozenSet[VertexId]:
        return self._out[v]

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def relabel(self, mapping: Dict[VertexId, VertexId]) -> 'Digraph':
        get = mapping.get
        return Digraph(
            (get(v, v) for v in self.vertices),
            ((get(t, t), get(h, h)) for t, h in self.arcs))

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(sorted(self.vertices))
        g.add_edges_from(self.sorted_arcs())
        return g

    def __repr__(self) -> str:
        return f'<Digraph n={len(self.vertices)} arcs={len(self.arcs)}>'


@dataclass(frozen=True)
class AcyclicityVerdict:
    acyclic: bool
    order: Optional[Tuple[VertexId, ...]] = None
    cycle: Optional[Tuple[VertexId, ...]] = None

    def __bool__(self) -> bool:
        return self.acyclic


def _shortest_cycle_from(d: Digraph, start: VertexId):
    # BFS restricted to vertices >= start, so `start` is the cycle minimum
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(d.out_neighbors(v)):
            if w == start:
                path = [v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            if w > start and w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def is_acyclic(d: Digraph) -> AcyclicityVerdict:
    """Test acyclicity and return a certificate either way.

    An acyclic digraph yields its lexicographically smallest topological
    order; otherwise a shortest directed cycle `x1, ..., xp, x1` is
    returned, starting at its smallest vertex, ties broken by comparing
    the cycles as tuples.
    """
    g = d.to_networkx()
    if nx.is_directed_acyclic_graph(g):
        return AcyclicityVerdict(
            True, order=tuple(nx.lexicographical_topological_sort(g)))

    best = None
    for v in sorted(d.vertices):
        cycle = _shortest_cycle_from(d, v)
        if cycle is None:
            continue
        if best is None or (len(cycle), cycle) < (len(best), best):
            best = cycle
    return AcyclicityVerdict(False, cycle=best + (best[0], ))


def check_order(d: Digraph, order) -> bool:
    """True when `order` lists V(d) once and every arc points forward."""
    pos = {v: i for i, v in enumerate(order)}
    return len(pos) == len(order) == len(d.vertices) and \
        set(pos) == d.vertices and \
        all(pos[t] < pos[h] for t, h in d.arcs)


def check_cycle(d: Digraph, cycle) -> bool:
    """True when `cycle` is a closed directed walk of distinct vertices."""
    body = cycle[:-1]
    return len(cycle) >= 3 and cycle[0] == cycle[-1] and \
        len(set(body)) == len(body) and \
        all((a, b) in d.arcs for a, b in zip(cycle, cycle[1:]))


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.vertices, ((h, t) for t, h in d.arcs))


def swap_neighborhoods(d: Digraph, u: VertexId, x: VertexId) -> Digraph:
    """Exchange the in- and out-neighbourhoods of `u` and `x`.

    This is relabelling by the transposition u<->x; an arc between `u`
    and `x` maps to its reversal, so no self-arc can appear.

    Raises:
        SameVertex: `u` equals `x`.
        UnknownVertex: `u` or `x` is not a vertex of `d`.
    """
    if u == x:
        raise SameVertex(u)
    for v in (u, x):
        if v not in d.vertices:
            raise UnknownVertex((u, x), v)
    return d.relabel({u: x, x: u})


def union(
        d1: Digraph,
        d2: Digraph,
        shared: Optional[Iterable[VertexId]] = None) -> Digraph:
    """Union of vertex and arc sets.

    Acyclicity is not checked; callers verify the result.

    Raises:
        SharedVertexMismatch: `shared` is given and differs from
            V(d1) & V(d2).
        TwoCycle: an arc of one digraph is reversed in the other.
    """
    common = d1.vertices & d2.vertices
    if shared is not None and frozenset(shared) != common:
        raise SharedVertexMismatch(frozenset(shared), common)
    for t, h in sorted(d1.arcs):
        if (h, t) in d2.arcs:
            raise TwoCycle(t, h)
    return Digraph(d1.vertices | d2.vertices, d1.arcs | d2.arcs)
