from .trace import ConstructionTrace, Target, replay
from .trace import BaseBranch, TwoEdge, RemoveBranch, Reverse, Swap, Merge
from .base import base_branch_digraph, base_branch_roles, two_edge_digraph
from .recursive import free_side, construct_good_digraph
from .flower import flower_digraph, necessary_check, NecessaryVerdict
from .flower import flower_family_check, FlowerFacts, recognize_flower
