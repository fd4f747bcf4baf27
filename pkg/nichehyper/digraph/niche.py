import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple
from .digraph import Digraph, is_acyclic
from ..hypergraph import Hypergraph, Hyperedge, VertexId, validate
from ..util import edge_key, sorted_edges


class Side(enum.Enum):
    IN = 'in'
    OUT = 'out'

    @property
    def other(self) -> 'Side':
        return Side.OUT if self is Side.IN else Side.IN


def neighborhood(d: Digraph, v: VertexId, side: Side):
    return d.in_neighbors(v) if side is Side.IN else d.out_neighbors(v)


@dataclass(frozen=True)
class NicheResult:
    hypergraph: Hypergraph
    simple: bool
    witness: Dict[Hyperedge, Tuple[VertexId, Side]]


def niche_hypergraph(d: Digraph) -> NicheResult:
    """Niche hypergraph NH(d).

    Collects every in- and out-neighbourhood of size two or more;
    duplicates collapse. The witness of a hyperedge is the smallest vertex
    producing it, in-neighbourhoods before out-neighbourhoods. A family
    where one set strictly contains another is still returned, with
    `simple` set to False.
    """
    witness = {}
    for v in sorted(d.vertices):
        for side in (Side.IN, Side.OUT):
            e = neighborhood(d, v, side)
            if len(e) >= 2 and e not in witness:
                witness[e] = (v, side)
    edges = sorted_edges(witness)
    simple = not any(e < f for e in edges for f in edges)
    if not simple:
        logging.warning(
            f'niche hypergraph of {d!r} is not simple')
    return NicheResult(Hypergraph(d.vertices, edges), simple, witness)


class ViolationKind(enum.Enum):
    CYCLIC = 'cyclic'
    VERTEX_SET = 'vertex-set'
    MISSING_EDGE = 'missing-edge'
    SPURIOUS_EDGE = 'spurious-edge'
    NON_SIMPLE = 'non-simple'
    BOTH_SIDED_BUDS = 'both-sided-buds'


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: object = None

    def __str__(self) -> str:
        return f'{self.kind.value}: {self.detail}'


@dataclass(frozen=True)
class GoodnessReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def good(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.good

    def kinds(self):
        return {v.kind for v in self.violations}


def both_sided(d: Digraph, v: VertexId) -> bool:
    return bool(d.in_neighbors(v)) and bool(d.out_neighbors(v))


def is_good_digraph(d: Digraph, h: Hypergraph) -> GoodnessReport:
    """Check that `d` is a good digraph of `h`.

    Good means: acyclic; NH(d) equals `h` exactly (same vertex set and
    the same simple family of hyperedges); and every hyperedge of `h` has
    at most one bud whose in- and out-neighbourhoods are both non-empty.
    Every violation found is reported.
    """
    violations = []

    verdict = is_acyclic(d)
    if not verdict:
        violations.append(Violation(ViolationKind.CYCLIC, verdict.cycle))

    if d.vertices != h.vertices:
        violations.append(Violation(ViolationKind.VERTEX_SET, {
            'extra': sorted(d.vertices - h.vertices),
            'missing': sorted(h.vertices - d.vertices),
        }))

    nh = niche_hypergraph(d)
    if not nh.simple:
        violations.append(Violation(ViolationKind.NON_SIMPLE))
    for e in sorted_edges(h.edges - nh.hypergraph.edges):
        violations.append(
            Violation(ViolationKind.MISSING_EDGE, list(edge_key(e))))
    for e in sorted_edges(nh.hypergraph.edges - h.edges):
        v, side = nh.witness[e]
        violations.append(Violation(ViolationKind.SPURIOUS_EDGE, {
            'edge': list(edge_key(e)),
            'vertex': v,
            'side': side.value,
        }))

    buds = validate(h).buds
    for e in h.sorted_edges():
        active = sorted(
            v for v in e
            if v in buds and v in d.vertices and both_sided(d, v))
        if len(active) > 1:
            violations.append(Violation(ViolationKind.BOTH_SIDED_BUDS, {
                'edge': list(edge_key(e)),
                'buds': active,
            }))

    return GoodnessReport(violations)
