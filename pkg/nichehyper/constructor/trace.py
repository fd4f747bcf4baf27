import enum
import json
from dataclasses import dataclass, asdict, field
from typing import List, Tuple
from ..hypergraph import VertexId


class Target(enum.Enum):
    """Which digraph of a pending merge a transform applies to.

    `branch` is the most recently built digraph, `rest` the one built
    before it.
    """
    REST = 'rest'
    BRANCH = 'branch'


@dataclass(frozen=True)
class BaseBranch:
    trunk: Tuple[VertexId, ...]
    twigs: Tuple[Tuple[VertexId, ...], ...]
    shared: Tuple[VertexId, ...]
    source: VertexId
    ends: Tuple[VertexId, ...]
    step = 'base_branch'


@dataclass(frozen=True)
class TwoEdge:
    e: Tuple[VertexId, ...]
    f: Tuple[VertexId, ...]
    shared: VertexId
    source: VertexId
    sink: VertexId
    step = 'two_edge'


@dataclass(frozen=True)
class RemoveBranch:
    trunk: Tuple[VertexId, ...]
    twigs: Tuple[Tuple[VertexId, ...], ...]
    attachment: VertexId
    step = 'remove_branch'


@dataclass(frozen=True)
class Reverse:
    target: Target
    step = 'reverse'


@dataclass(frozen=True)
class Swap:
    target: Target
    u: VertexId
    x: VertexId
    step = 'swap'


@dataclass(frozen=True)
class Merge:
    u: VertexId
    step = 'merge'


_STEPS = {
    cls.step: cls
    for cls in (BaseBranch, TwoEdge, RemoveBranch, Reverse, Swap, Merge)
}


def _tuples(value):
    if isinstance(value, list):
        return tuple(_tuples(v) for v in value)
    return value


def step_to_dict(step) -> dict:
    data = {'step': step.step}
    for key, value in asdict(step).items():
        data[key] = value.value if isinstance(value, Target) else value
    return json.loads(json.dumps(data))


def step_from_dict(data: dict):
    data = dict(data)
    try:
        cls = _STEPS[data.pop('step')]
    except KeyError as e:
        raise ValueError(f'unknown trace step: {e}')
    if 'target' in data:
        data['target'] = Target(data['target'])
    return cls(**{k: _tuples(v) for k, v in data.items()})


@dataclass
class ConstructionTrace:
    steps: List[object] = field(default_factory=list)

    def append(self, step) -> None:
        self.steps.append(step)

    def to_list(self) -> List[dict]:
        return [step_to_dict(step) for step in self.steps]

    @classmethod
    def from_list(cls, data: List[dict]) -> 'ConstructionTrace':
        return cls([step_from_dict(d) for d in data])

    def kinds(self) -> List[str]:
        return [step.step for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def replay(trace: ConstructionTrace):
    """Rebuild the digraph of a construction from its trace alone.

    The trace is run as a stack program: `base_branch` and `two_edge`
    push a digraph, `reverse` and `swap` act on the `branch` (top) or
    `rest` (below top) digraph, `merge` pops both and pushes their union.
    """
    from .base import base_branch_arcs, two_edge_arcs
    from ..digraph import Digraph, reverse, swap_neighborhoods, union

    stack = []
    for step in trace.steps:
        if isinstance(step, BaseBranch):
            stack.append(Digraph.from_arcs(
                base_branch_arcs(step),
                vertices=set(step.trunk).union(*step.twigs)))
        elif isinstance(step, TwoEdge):
            stack.append(Digraph.from_arcs(
                two_edge_arcs(step),
                vertices=set(step.e) | set(step.f)))
        elif isinstance(step, (Reverse, Swap)):
            idx = -1 if step.target is Target.BRANCH else -2
            stack[idx] = reverse(stack[idx]) if isinstance(step, Reverse) \
                else swap_neighborhoods(stack[idx], step.u, step.x)
        elif isinstance(step, Merge):
            branch = stack.pop()
            rest = stack.pop()
            stack.append(union(rest, branch, shared={step.u}))
    if len(stack) != 1:
        raise ValueError(
            f'trace leaves {len(stack)} digraphs on the stack, expected 1')
    return stack[0]
