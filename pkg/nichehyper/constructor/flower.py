import logging
from dataclasses import dataclass
from typing import Optional, Tuple
from ..digraph import Digraph, is_acyclic, niche_hypergraph
from ..exceptions import BadSpec
from ..exceptions import VerificationError
from ..hypergraph import FamilySpec, Hypergraph, VertexId
from ..hypergraph import flower, flower_layout, is_uniform, validate


def flower_digraph(r: int, s: int) -> Tuple[Hypergraph, Digraph]:
    """The flower F(s) of rank `r` with an acyclic digraph realizing it.

    For s <= r the path edges, the extra edge and the petals f_1 ..
    f_{s-1} are each produced as an in- or out-neighbourhood of a path
    vertex. For s > r the petals f_r .. f_{s-1} become the
    in-neighbourhoods of u_1 .. u_{s-r} instead.

    Raises:
        BadSpec: r < 3, or s outside 3..2r.
        VerificationError: the digraph does not realize F(s).
    """
    layout = flower_layout(s, r)
    h = layout.hypergraph()
    e1, e2, e3, e4, e5 = layout.path
    a = layout.center

    arcs = set()
    arcs.update((e5[0], v) for v in e1)
    arcs.update((v, e4[0]) for v in e2)
    arcs.update((v, e4[1]) for v in e3)
    arcs.update((e3[0], v) for v in e4)
    arcs.update((v, a) for v in e5)
    arcs.update((a, v) for v in layout.extra)
    for i in range(2, min(s, r) + 1):
        arcs.update((e5[i - 1], v) for v in layout.petals[i - 2])
    for i in range(1, s - r + 1):
        arcs.update((v, layout.extra[i - 1]) for v in layout.petals[r + i - 2])

    d = Digraph.from_arcs(arcs, vertices=h.vertices)

    violations = []
    verdict = is_acyclic(d)
    if not verdict:
        violations.append(f'cycle {list(verdict.cycle)}')
    nh = niche_hypergraph(d)
    if not nh.simple or nh.hypergraph != h:
        violations.append('niche hypergraph differs from the flower')
    if violations:
        raise VerificationError(violations)

    logging.debug(f'flower F({s}) of rank {r} realized with {len(arcs)} arcs')
    return h, d


@dataclass(frozen=True)
class NecessaryVerdict:
    passed: bool
    vertex: Optional[VertexId] = None
    max_degree: int = 0
    rank: Optional[int] = None

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        if self.passed:
            return 'pass'
        return f'fail({self.vertex})'


def necessary_check(h: Hypergraph) -> NecessaryVerdict:
    """Test the degree bound Δ <= 2·rank for niche hypergraphs.

    Passing says nothing about the niche number being finite.
    """
    report = validate(h)
    if report.rank is None or report.max_degree <= 2 * report.rank:
        return NecessaryVerdict(True, None, report.max_degree, report.rank)
    return NecessaryVerdict(
        False, report.max_degree_vertex(), report.max_degree, report.rank)


@dataclass(frozen=True)
class FlowerFacts:
    r: int
    s: int
    uniform: bool
    linear: bool
    max_degree: int
    center_degree: int
    nh_equal: bool
    acyclic: bool
    added_vertices: int

    @property
    def ok(self) -> bool:
        return self.uniform and self.linear and self.nh_equal and \
            self.acyclic and self.max_degree == self.center_degree == self.s \
            and self.added_vertices == 0


def flower_family_check(r: int, s: int) -> FlowerFacts:
    h, d = flower_digraph(r, s)
    report = validate(h)
    nh = niche_hypergraph(d)
    return FlowerFacts(
        r=r,
        s=s,
        uniform=is_uniform(h) and report.rank == r,
        linear=report.is_linear,
        max_degree=report.max_degree,
        center_degree=report.degree[flower_layout(s, r).center],
        nh_equal=nh.simple and nh.hypergraph == h,
        acyclic=bool(is_acyclic(d)),
        added_vertices=len(d.vertices - h.vertices))


def recognize_flower(h: Hypergraph) -> Optional[Tuple[int, int]]:
    """(s, r) when `h` is exactly the generated flower F(s) of rank r."""
    report = validate(h)
    if report.rank is None:
        return None
    spec = FamilySpec.flower(report.max_degree, report.rank)
    try:
        spec.check()
    except BadSpec:
        return None
    if flower(spec.s, spec.r) != h:
        return None
    return spec.s, spec.r
