from .digraph import Arc, Digraph, AcyclicityVerdict
from .digraph import is_acyclic, check_order, check_cycle
from .digraph import reverse, swap_neighborhoods, union
from .niche import Side, NicheResult, niche_hypergraph, neighborhood
from .niche import GoodnessReport, Violation, ViolationKind
from .niche import is_good_digraph, both_sided
