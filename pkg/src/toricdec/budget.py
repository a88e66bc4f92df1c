"""Global precision/step budgets.

Every refinement loop in the exact kernel halves an interval width; the
precision budget caps the number of halvings, the step budget caps
search loops (coverage K, orbit hit search, window growth).  Budgets
turn potential non-termination into an explicit PrecisionError/
BudgetError; they never change a computed answer.
"""

from contextlib import contextmanager
from dataclasses import dataclass, replace
import threading


@dataclass(frozen=True)
class Budget:
    precision_bits: int = 4096   # max interval halvings per comparison
    step_budget: int = 500_000   # generic search-loop cap
    coverage_max_k: int = 20_000  # cap on coverage bound search
    window_max: int = 14         # max factor-window length in state-word certification
    enum_cap: int = 40_000       # cap on |alphabet|**W enumeration


_local = threading.local()
_DEFAULT = Budget()


def current() -> Budget:
    return getattr(_local, "budget", _DEFAULT)


@contextmanager
def scoped(**overrides):
    """Temporarily override budget fields in this thread."""
    old = current()
    _local.budget = replace(old, **overrides)
    try:
        yield _local.budget
    finally:
        _local.budget = old
