import asyncio
import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from multiprocessing import Manager
from typing import Callable, FrozenSet, Iterator, List, Optional, Sequence
from typing import Tuple, Union
import networkx as nx
from .budget import SearchBudget
from ..digraph import Digraph, is_acyclic, niche_hypergraph
from ..exceptions import BudgetExceeded
from ..exceptions import VerificationError
from ..hypergraph import Hypergraph, VertexId, validate


class _BudgetHit(Exception):
    pass


class _Stopped(Exception):
    pass


class _Search:
    """Depth-first search over canonical DAGs on vertices 0..n-1.

    Vertices are placed one position at a time and each picks its
    in-neighbourhood among the vertices already placed, so every arc
    points forward. A DAG is only produced under its lexicographically
    smallest topological order: a vertex placed after a larger one must
    have an in-neighbour at or after the last such larger vertex.

    With `edges` given, in-neighbourhoods are limited to the empty set,
    singletons and hyperedges, and branches where an out-neighbourhood or
    a hyperedge can no longer come out right are cut.

    `examined` counts the partial DAGs (placements passing the canonical
    test) and is what `max_dags` limits.
    """

    CHECK_CLOCK_EVERY = 4096

    def __init__(
            self,
            n: int,
            edges: Optional[Sequence[FrozenSet[int]]] = None,
            max_dags: Optional[int] = None,
            deadline: Optional[float] = None,
            stopped: Optional[Callable[[], bool]] = None):
        self.n = n
        self.edges = None if edges is None else list(edges)
        self.edge_set = None if edges is None else set(self.edges)
        self.max_dags = max_dags
        self.deadline = deadline
        self.stopped = stopped
        self.pos = [-1] * n
        self.order = []
        self.ins = [frozenset()] * n
        self.outs = [set() for _ in range(n)]
        self.examined = 0
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes % self.CHECK_CLOCK_EVERY:
            return
        if self.deadline is not None and time.time() >= self.deadline:
            raise _BudgetHit('time limit reached')
        if self.stopped is not None and self.stopped():
            raise _Stopped

    def _count(self):
        self.examined += 1
        if self.max_dags is not None and self.examined > self.max_dags:
            raise _BudgetHit('DAG limit reached')

    def _candidates(self, w: int):
        placed = self.order
        if self.edges is None:
            for size in range(len(placed) + 1):
                for combo in itertools.combinations(placed, size):
                    yield frozenset(combo)
            return
        yield frozenset()
        for x in placed:
            yield frozenset((x, ))
        placed_set = set(placed)
        for e in self.edges:
            if w not in e and e <= placed_set:
                yield e

    def _canonical(self, w: int, ins: FrozenSet[int]) -> bool:
        q = len(self.order)
        for p in range(q - 1, -1, -1):
            if self.order[p] > w:
                return any(self.pos[x] >= p for x in ins)
        return True

    def _alive(self, ins: FrozenSet[int]) -> bool:
        if self.edges is None:
            return True
        for x in ins:
            out = self.outs[x]
            if len(out) >= 2 and not any(out <= e for e in self.edges):
                return False
        placed = self.order
        unplaced = [v for v in range(self.n) if self.pos[v] < 0]
        for e in self.edges:
            if any(v not in e for v in unplaced):
                continue
            if any(self.ins[v] == e for v in placed):
                continue
            if any(
                    x not in e and self.outs[x] <= e and
                    all(self.pos[v] < 0 or v in self.outs[x] for v in e)
                    for x in placed):
                continue
            return False
        return True

    def _complete(self) -> bool:
        if self.edges is None:
            return True
        realized = set()
        for v in range(self.n):
            for nb in (self.ins[v], frozenset(self.outs[v])):
                if len(nb) >= 2:
                    if nb not in self.edge_set:
                        return False
                    realized.add(nb)
        return realized == self.edge_set

    def run(self, prefix: Sequence[int] = ()) -> Iterator[List[FrozenSet]]:
        q = len(self.order)
        if q == self.n:
            if self._complete():
                yield list(self.ins)
            return

        choices = [prefix[q]] if q < len(prefix) else \
            [v for v in range(self.n) if self.pos[v] < 0]
        for w in choices:
            for ins in self._candidates(w):
                self._tick()
                if not self._canonical(w, ins):
                    continue
                self._count()
                self.pos[w] = q
                self.order.append(w)
                self.ins[w] = ins
                for x in ins:
                    self.outs[x].add(w)
                if self._alive(ins):
                    yield from self.run(prefix)
                for x in ins:
                    self.outs[x].discard(w)
                self.ins[w] = frozenset()
                self.order.pop()
                self.pos[w] = -1


def _to_digraph(names: Sequence[VertexId], ins) -> Digraph:
    return Digraph.from_arcs(
        ((names[x], names[w]) for w, nb in enumerate(ins) for x in nb),
        vertices=names)


def iter_dags(vertices: Sequence[VertexId]) -> Iterator[Digraph]:
    """Every labelled acyclic digraph on `vertices`, each exactly once."""
    names = sorted(vertices)
    for ins in _Search(len(names)).run():
        yield _to_digraph(names, ins)


@dataclass(frozen=True)
class EnumerationAudit:
    n: int
    visited: int
    distinct_visited: int
    accepted: int
    orientations: int
    acyclic_orientations: int

    @property
    def consistent(self) -> bool:
        return self.distinct_visited == self.accepted == \
            self.acyclic_orientations


def enumeration_audit(n: int) -> EnumerationAudit:
    """Cross-check the canonical enumeration against plain sweeps.

    Visits every (order, forward arc set) pair and counts the distinct
    digraphs among them, then orients each vertex pair in all three ways
    (no arc, forward, backward) and counts the acyclic results. Both must
    agree with the number of DAGs the canonical search accepts. Only
    meant for n <= 4.
    """
    pairs = list(itertools.combinations(range(n), 2))
    visited = 0
    distinct = set()
    for order in itertools.permutations(range(n)):
        forward = [(order[i], order[j]) for i, j in pairs]
        for mask in range(1 << len(forward)):
            arcs = frozenset(
                a for b, a in enumerate(forward) if mask >> b & 1)
            visited += 1
            distinct.add(arcs)

    orientations = 0
    acyclic = 0
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                g.add_edge(i, j)
            elif c == 2:
                g.add_edge(j, i)
        orientations += 1
        acyclic += nx.is_directed_acyclic_graph(g)

    accepted = sum(1 for _ in _Search(n).run())
    return EnumerationAudit(
        n, visited, len(distinct), accepted, orientations, acyclic)


@dataclass(frozen=True)
class Realizable:
    digraph: Digraph
    k: int


@dataclass(frozen=True)
class NotRealizableUpTo:
    """No digraph with `k_max` added vertices, hence none with fewer."""
    k_max: int


@dataclass(frozen=True)
class RealizabilityResult:
    outcome: Union[Realizable, NotRealizableUpTo]
    dags_examined: int
    wall_time: float

    @property
    def realizable(self) -> bool:
        return isinstance(self.outcome, Realizable)

    @property
    def digraph(self) -> Optional[Digraph]:
        return self.outcome.digraph if self.realizable else None


@dataclass(frozen=True)
class LowerBound:
    k: int

    def __str__(self) -> str:
        return f'LowerBound({self.k})'

    __repr__ = __str__


NicheNumber = Union[int, LowerBound]


@dataclass(frozen=True)
class _PartitionOutcome:
    witness: Optional[List[FrozenSet[int]]]
    examined: int
    budget_hit: bool


def _run_partition(
        n: int,
        edges: Tuple[FrozenSet[int], ...],
        prefix: Tuple[int, ...],
        max_dags: Optional[int],
        deadline: Optional[float],
        index: int = 0,
        found=None) -> _PartitionOutcome:
    """Search one partition.

    `found` is a shared value holding the lowest partition index known to
    have a witness; the search gives up once it drops below `index`.
    """
    stopped = None if found is None else (lambda: found.value < index)
    search = _Search(n, edges, max_dags, deadline, stopped)
    try:
        witness = next(iter(search.run(prefix)), None)
    except _BudgetHit:
        return _PartitionOutcome(None, search.examined, True)
    except _Stopped:
        logging.debug(f'partition {index} stopped early')
        return _PartitionOutcome(None, search.examined, False)
    return _PartitionOutcome(witness, search.examined, False)


def fresh_vertices(h: Hypergraph, k: int) -> List[VertexId]:
    """`k` new names z1, z2, ... not clashing with V(h)."""
    names = []
    for i in itertools.count(1):
        if len(names) == k:
            return names
        name = f'z{i}'
        if name not in h.vertices:
            names.append(name)


def _partitions(n: int) -> List[Tuple[int, ...]]:
    if n <= 1:
        return [tuple(range(n))]
    return list(itertools.permutations(range(n), 2))


def _verify_witness(d: Digraph, expected: Hypergraph):
    verdict = is_acyclic(d)
    nh = niche_hypergraph(d)
    if not verdict or not nh.simple or nh.hypergraph != expected:
        raise VerificationError(['search produced an invalid witness'])


async def realizes_async(
        h: Hypergraph,
        k: int,
        budget: SearchBudget = SearchBudget()) -> RealizabilityResult:
    """Search for an acyclic digraph D with NH(D) = h plus k isolated
    vertices.

    The search space is split by the first two positions of the
    topological order. With `budget.worker_count > 1` partitions run in a
    process pool; the witness reported is always the one of the lowest
    partition that has one, so results do not depend on timing.

    Raises:
        BudgetExceeded: too many vertices, or the DAG or time limit was
            reached before any witness turned up.
    """
    validate(h)
    n = len(h.vertices) + k
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f'{n} vertices exceed the limit of {budget.max_vertices}')

    start = time.time()
    names = sorted(h.vertices) + fresh_vertices(h, k)
    index = {v: i for i, v in enumerate(names)}
    edges = tuple(
        frozenset(index[v] for v in e) for e in h.sorted_edges())
    deadline = None if budget.time_limit is None \
        else start + budget.time_limit
    partitions = _partitions(n)
    logging.debug(
        f'searching {n} vertices (k={k}) in {len(partitions)} partitions')

    examined = 0
    budget_hit = False
    witness = None
    if budget.worker_count > 1 and len(partitions) > 1:
        loop = asyncio.get_running_loop()
        with Manager() as manager:
            found = manager.Value('i', len(partitions))
            pool = ProcessPoolExecutor(max_workers=budget.worker_count)
            try:
                futures = [
                    loop.run_in_executor(
                        pool, _run_partition, n, edges, prefix,
                        budget.max_dags, deadline, i, found)
                    for i, prefix in enumerate(partitions)]
                for i, fut in enumerate(futures):
                    outcome = await fut
                    examined += outcome.examined
                    budget_hit |= outcome.budget_hit
                    if outcome.witness is not None:
                        # every earlier partition is done by now
                        found.value = i
                        witness = outcome.witness
                        for later in futures[i + 1:]:
                            later.cancel()
                        break
            finally:
                pool.shutdown(wait=True, cancel_futures=True)
    else:
        for prefix in partitions:
            remaining = budget.max_dags - examined
            outcome = _run_partition(n, edges, prefix, remaining, deadline)
            examined += outcome.examined
            budget_hit |= outcome.budget_hit
            if outcome.witness is not None:
                witness = outcome.witness
                break
            if budget_hit:
                break
            await asyncio.sleep(0)

    elapsed = time.time() - start
    if witness is not None:
        d = _to_digraph(names, witness)
        _verify_witness(d, Hypergraph(names, h.edges))
        return RealizabilityResult(Realizable(d, k), examined, elapsed)
    if budget_hit or examined > budget.max_dags:
        raise BudgetExceeded(
            f'search budget exhausted after {examined} DAGs',
            dags_examined=examined)
    return RealizabilityResult(NotRealizableUpTo(k), examined, elapsed)


def realizes(
        h: Hypergraph,
        k: int,
        budget: SearchBudget = SearchBudget()) -> RealizabilityResult:
    return asyncio.run(realizes_async(h, k, budget))


async def niche_number_async(
        h: Hypergraph,
        k_max: int,
        budget: SearchBudget = SearchBudget()) -> NicheNumber:
    for k in range(k_max + 1):
        result = await realizes_async(h, k, budget)
        if result.realizable:
            return k
    return LowerBound(k_max + 1)


def niche_number_upto(
        h: Hypergraph,
        k_max: int,
        budget: SearchBudget = SearchBudget()) -> NicheNumber:
    """Smallest k <= k_max with `h` realizable using k added vertices.

    Realizable at k implies realizable at k+1 (add an arcless vertex),
    so the first k found is the niche number. Otherwise the result is
    `LowerBound(k_max + 1)`; it never claims the number is infinite.

    Raises:
        BudgetExceeded: a search stopped before it was exhaustive.
    """
    return asyncio.run(niche_number_async(h, k_max, budget))


def dag_count(n: int) -> int:
    """Number of labelled DAGs on n vertices (Robinson's recurrence)."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(
            (-1) ** (j + 1) * math.comb(m, j) * 2 ** (j * (m - j)) * a[m - j]
            for j in range(1, m + 1)))
    return a[n]
