import re

_VALID_VERTEX = re.compile(r'^[^\s,]+$')


def is_vertex_id(s) -> bool:
    """A vertex id is a non-empty token without white space or commas."""
    return isinstance(s, str) and bool(_VALID_VERTEX.match(s))
