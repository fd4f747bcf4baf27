import enum
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple
import networkx as nx
from .hypergraph import Hypergraph, Hyperedge, VertexId
from ..exceptions import BadSpec


class Family(enum.Enum):
    HYPERPATH = 'path'
    HYPERNOVA = 'nova'
    FLOWER = 'flower'
    RANDOM_T = 'random'


@dataclass(frozen=True)
class FamilySpec:
    kind: Family
    k: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    edge_count: Optional[int] = None
    size_range: Optional[Tuple[int, int]] = None
    seed: Optional[int] = None

    @classmethod
    def hyperpath(cls, k: int, r: int) -> 'FamilySpec':
        return cls(Family.HYPERPATH, k=k, r=r)

    @classmethod
    def hypernova(cls, m: int, r: int) -> 'FamilySpec':
        return cls(Family.HYPERNOVA, m=m, r=r)

    @classmethod
    def flower(cls, s: int, r: int) -> 'FamilySpec':
        return cls(Family.FLOWER, s=s, r=r)

    @classmethod
    def random_t(
            cls,
            edge_count: int,
            size_range: Tuple[int, int] = (3, 6),
            seed: int = 0) -> 'FamilySpec':
        return cls(
            Family.RANDOM_T,
            edge_count=edge_count,
            size_range=tuple(size_range),
            seed=seed)

    def check(self):
        """Raise BadSpec when the parameters leave the family's range."""
        if self.kind is Family.HYPERPATH:
            if self.k is None or self.k < 1:
                raise BadSpec(f'hyperpath needs k >= 1, got k={self.k}')
            if self.r is None or self.r < 2:
                raise BadSpec(f'hyperpath needs r >= 2, got r={self.r}')
        elif self.kind is Family.HYPERNOVA:
            if self.m is None or self.m < 1:
                raise BadSpec(f'hypernova needs m >= 1, got m={self.m}')
            if self.r is None or self.r < 2:
                raise BadSpec(f'hypernova needs r >= 2, got r={self.r}')
        elif self.kind is Family.FLOWER:
            if self.r is None or self.r < 3:
                raise BadSpec(f'flower needs r >= 3, got r={self.r}')
            if self.s is None or not 3 <= self.s <= 2 * self.r:
                raise BadSpec(
                    f'flower needs 3 <= s <= 2r = {2 * self.r}, '
                    f'got s={self.s}')
        elif self.kind is Family.RANDOM_T:
            if self.edge_count is None or self.edge_count < 2:
                raise BadSpec(
                    f'random_T needs at least two hyperedges, '
                    f'got {self.edge_count}')
            if self.size_range is None or len(self.size_range) != 2:
                raise BadSpec('random_T needs a (min, max) size range')
            lo, hi = self.size_range
            if lo < 3 or hi < lo:
                raise BadSpec(
                    f'random_T needs 3 <= min size <= max size, '
                    f'got {lo}..{hi}')
            if self.seed is None:
                raise BadSpec('random_T needs a seed')
        else:
            raise BadSpec(f'unknown family: {self.kind}')


def _pad(i: int, top: int) -> str:
    return str(i).zfill(len(str(top)))


def hyperpath(k: int, r: int) -> Hypergraph:
    """k r-sets in a row, consecutive ones sharing exactly one vertex."""
    top = k * (r - 1)
    names = [f'p{_pad(t, top)}' for t in range(top + 1)]
    return Hypergraph.from_edges(
        names[i * (r - 1):i * (r - 1) + r] for i in range(k))


def hypernova(m: int, r: int) -> Hypergraph:
    """m r-sets pairwise meeting in the single centre `x`."""
    return Hypergraph.from_edges(
        ['x', *(f'n{_pad(i, m)}_{_pad(j, r)}' for j in range(1, r))]
        for i in range(1, m + 1))


@dataclass(frozen=True)
class FlowerLayout:
    """Named parts of the (s-1)-petal flower F(s).

    `path[i][j]` is the j-th vertex (0-based) of the i-th hyperpath edge,
    `petals[i][0]` is the centre `a` (the first vertex of the first path
    edge) and `extra[0]` is the second vertex of the second path edge.
    """
    r: int
    s: int
    path: Tuple[Tuple[VertexId, ...], ...]
    petals: Tuple[Tuple[VertexId, ...], ...]
    extra: Tuple[VertexId, ...]

    @property
    def center(self) -> VertexId:
        return self.path[0][0]

    def edges(self) -> List[Hyperedge]:
        return [
            frozenset(e) for e in (*self.path, *self.petals, self.extra)]

    def hypergraph(self) -> Hypergraph:
        return Hypergraph.from_edges(self.edges())


def flower_layout(s: int, r: int) -> FlowerLayout:
    FamilySpec.flower(s, r).check()
    path = []
    for i in range(1, 6):
        edge = [f'v{i}_{_pad(j, r)}' for j in range(1, r + 1)]
        if path:
            edge[0] = path[-1][-1]
        path.append(tuple(edge))
    a = path[0][0]
    petals = tuple(
        (a, *(f'w{_pad(i, s)}_{_pad(j, r)}' for j in range(2, r + 1)))
        for i in range(1, s))
    extra = (path[1][1], *(f'u{_pad(j, r)}' for j in range(2, r + 1)))
    return FlowerLayout(r, s, tuple(path), petals, extra)


def flower(s: int, r: int) -> Hypergraph:
    return flower_layout(s, r).hypergraph()


def random_t(
        edge_count: int,
        size_range: Tuple[int, int],
        seed: int) -> Hypergraph:
    """Random member of class T.

    A uniform labelled tree on the edge nodes is drawn from a Prüfer
    sequence. Each node gets a size from `size_range`, raised to at least
    its tree degree; every tree adjacency becomes one fresh shared vertex
    and the remaining slots are filled with fresh buds.
    """
    rng = random.Random(seed)
    lo, hi = size_range
    if edge_count == 2:
        tree = nx.path_graph(2)
    else:
        sequence = [rng.randrange(edge_count) for _ in range(edge_count - 2)]
        tree = nx.from_prufer_sequence(sequence)

    members = {i: [] for i in range(edge_count)}
    for i, j in sorted(tuple(sorted(e)) for e in tree.edges):
        shared = f's{_pad(i, edge_count)}_{_pad(j, edge_count)}'
        members[i].append(shared)
        members[j].append(shared)

    edges = []
    for i in range(edge_count):
        size = max(rng.randint(lo, hi), 3, tree.degree[i])
        buds = [
            f'b{_pad(i, edge_count)}_{_pad(j, size)}'
            for j in range(size - len(members[i]))]
        edges.append(members[i] + buds)
    return Hypergraph.from_edges(edges)


def generate(spec: FamilySpec) -> Hypergraph:
    """Build the member of a named family described by `spec`.

    Raises:
        BadSpec: the parameters are outside the family's range.
    """
    spec.check()
    if spec.kind is Family.HYPERPATH:
        return hyperpath(spec.k, spec.r)
    if spec.kind is Family.HYPERNOVA:
        return hypernova(spec.m, spec.r)
    if spec.kind is Family.FLOWER:
        return flower(spec.s, spec.r)
    return random_t(spec.edge_count, spec.size_range, spec.seed)
