"""Canonical file formats.

Hypergraphs are stored as {"vertices": [...], "edges": [[...], ...]} and
digraphs as {"vertices": [...], "arcs": [[tail, head], ...]}, everything
sorted. JSON output is compact, UTF-8 and newline-terminated; the same
objects may be packed with MessagePack instead. Readers detect the format.
"""
import enum
import json
from typing import Union
import msgpack
from ..constructor.trace import ConstructionTrace
from ..digraph import Digraph
from ..exceptions import BadVertexId
from ..exceptions import ParseError
from ..hypergraph import Hypergraph, validate
from .edgekey import edge_key
from .is_name import is_vertex_id


class Format(enum.Enum):
    JSON = 'json'
    MSGPACK = 'msgpack'


def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {
        'vertices': sorted(h.vertices),
        'edges': [list(edge_key(e)) for e in h.sorted_edges()],
    }


def digraph_to_dict(d: Digraph) -> dict:
    return {
        'vertices': sorted(d.vertices),
        'arcs': [list(a) for a in d.sorted_arcs()],
    }


def encode(data, fmt: Format = Format.JSON) -> bytes:
    if fmt is Format.MSGPACK:
        return msgpack.packb(data, use_bin_type=True)
    text = json.dumps(data, separators=(',', ':'), ensure_ascii=False)
    return (text + '\n').encode('utf-8')


def decode(raw: Union[bytes, str]):
    """Decode JSON or MessagePack content.

    Raises:
        ParseError: the content is neither, with the position for JSON.
    """
    if isinstance(raw, str):
        raw = raw.encode('utf-8')
    head = raw.lstrip()[:1]
    if head in (b'{', b'[') or not head:
        try:
            return json.loads(raw.decode('utf-8'))
        except UnicodeDecodeError as e:
            raise ParseError(f'not UTF-8: {e.reason}')
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno)
    try:
        return msgpack.unpackb(raw, raw=False)
    except Exception as e:
        raise ParseError(f'neither JSON nor MessagePack: {e}')


def _strings(value, what: str):
    if not isinstance(value, list) or \
            not all(isinstance(v, str) for v in value):
        raise ParseError(f'{what} must be an array of strings')
    return value


def _object(data, keys):
    if not isinstance(data, dict):
        raise ParseError(f'expected an object with keys {", ".join(keys)}')
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f'missing key(s): {", ".join(missing)}')
    extra = sorted(set(data) - set(keys))
    if extra:
        raise ParseError(f'unexpected key(s): {", ".join(extra)}')
    return data


def parse_hypergraph(raw: Union[bytes, str]) -> Hypergraph:
    """Read and validate a hypergraph file.

    Raises:
        ParseError: malformed content.
        LoopEdge, NonSimple, UnknownVertex, BadVertexId: from `validate`.
    """
    data = _object(decode(raw), ('vertices', 'edges'))
    vertices = _strings(data['vertices'], 'vertices')
    if not isinstance(data['edges'], list):
        raise ParseError('edges must be an array')
    edges = [_strings(e, 'each edge') for e in data['edges']]
    h = Hypergraph(vertices, edges)
    validate(h)
    return h


def parse_digraph(raw: Union[bytes, str]) -> Digraph:
    """Read a digraph file.

    Raises:
        ParseError: malformed content.
        BadVertexId: a vertex is not a valid token.
        SelfArc, TwoCycle, UnknownVertex: from `Digraph`.
    """
    data = _object(decode(raw), ('vertices', 'arcs'))
    vertices = _strings(data['vertices'], 'vertices')
    for v in sorted(vertices):
        if not is_vertex_id(v):
            raise BadVertexId(v)
    arcs = data['arcs']
    if not isinstance(arcs, list) or not all(
            isinstance(a, list) and len(a) == 2 for a in arcs):
        raise ParseError('arcs must be an array of [tail, head] pairs')
    for a in arcs:
        _strings(a, 'each arc')
    return Digraph(vertices, [tuple(a) for a in arcs])


def parse_trace(raw: Union[bytes, str]) -> ConstructionTrace:
    data = decode(raw)
    if not isinstance(data, list):
        raise ParseError('a trace must be an array of steps')
    try:
        return ConstructionTrace.from_list(data)
    except (TypeError, ValueError) as e:
        raise ParseError(f'bad trace step: {e}')


def dump_hypergraph(h: Hypergraph, fmt: Format = Format.JSON) -> bytes:
    return encode(hypergraph_to_dict(h), fmt)


def dump_digraph(d: Digraph, fmt: Format = Format.JSON) -> bytes:
    return encode(digraph_to_dict(d), fmt)


def dump_trace(trace: ConstructionTrace, fmt: Format = Format.JSON) -> bytes:
    return encode(trace.to_list(), fmt)
