from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exhaustive search.

    `max_dags` caps the partial DAGs the search visits, not just the
    complete ones. A search that stops on `max_dags` or `time_limit`
    raises BudgetExceeded and claims nothing.
    """

    DEFAULT_MAX_VERTICES = 8
    DEFAULT_MAX_DAGS = 50_000_000
    DEFAULT_TIME_LIMIT = None  # seconds, None is unlimited
    DEFAULT_WORKERS = 1

    max_vertices: int = DEFAULT_MAX_VERTICES
    max_dags: int = DEFAULT_MAX_DAGS
    time_limit: Optional[float] = DEFAULT_TIME_LIMIT
    worker_count: int = DEFAULT_WORKERS
