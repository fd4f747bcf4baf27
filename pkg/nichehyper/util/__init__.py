from .is_name import is_vertex_id
from .edgekey import edge_key, sorted_edges
