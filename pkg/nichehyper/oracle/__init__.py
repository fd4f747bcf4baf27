from .budget import SearchBudget
from .search import iter_dags, enumeration_audit, EnumerationAudit, dag_count
from .search import realizes, realizes_async, RealizabilityResult
from .search import Realizable, NotRealizableUpTo, LowerBound, NicheNumber
from .search import niche_number_upto, niche_number_async, fresh_vertices
