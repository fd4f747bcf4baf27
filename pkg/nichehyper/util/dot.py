from ..digraph import Digraph
from ..hypergraph import Hypergraph
from .edgekey import edge_key


def _q(name: str) -> str:
    return '"' + name.replace('\\', '\\\\').replace('"', '\\"') + '"'


def digraph_to_dot(d: Digraph, name: str = 'D') -> str:
    """DOT text with a node statement per vertex and an edge per arc."""
    lines = [f'digraph {name} {{']
    lines.extend(f'  {_q(v)};' for v in sorted(d.vertices))
    lines.extend(f'  {_q(t)} -> {_q(h)};' for t, h in d.sorted_arcs())
    lines.append('}')
    return '\n'.join(lines) + '\n'


def hypergraph_to_dot(h: Hypergraph, name: str = 'H') -> str:
    """Bipartite incidence drawing; hyperedges become square nodes.

    A hyperedge node is identified by its comma-joined members, which can
    not clash with a vertex id.
    """
    lines = [f'graph {name} {{']
    lines.extend(f'  {_q(v)} [shape=circle];' for v in sorted(h.vertices))
    for e in h.sorted_edges():
        key = edge_key(e)
        node = _q(','.join(key))
        lines.append(f'  {node} [shape=square, label=""];')
        lines.extend(f'  {node} -- {_q(v)};' for v in key)
    lines.append('}')
    return '\n'.join(lines) + '\n'
