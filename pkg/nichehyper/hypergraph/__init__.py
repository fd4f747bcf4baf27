from .hypergraph import Hypergraph, Hyperedge, VertexId, StructureReport
from .hypergraph import validate, is_uniform, transpose_vertices
from .hypergraph import incidence_graph
from .structure import Branch, BranchDecomposition, Criterion, Membership
from .structure import classify_t, branch_decomposition, remove_branch
from .structure import line_graph, host_tree, check_host_tree
from .generate import Family, FamilySpec, FlowerLayout, flower_layout
from .generate import generate, hyperpath, hypernova, flower, random_t
