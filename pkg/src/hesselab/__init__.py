"""hesselab: exact plane-curve geometry over Q(w), w^2 + w + 1 = 0.

The package studies one pencil of plane cubics: its symmetry group, the
tangent lines at its nine common points, dual curves, the degree-18
degenerate fiber of a branch-curve family, and the enumerative
bookkeeping tying them together.  Everything is computed over the field
Q(w) with exact rational arithmetic; the ``checks`` module re-derives
every finitely checkable claim as a named PASS/FAIL/INFO row, served by
a CLI (``hesselab``) and an HTTP service (``hesselab.service``).
"""

from .checks import (
    ConfigError,
    SuiteConfig,
    SuiteReport,
    build_config,
    report_document,
    run_suite,
)
from .hesse import PencilParam, hesse_cubic

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "PencilParam",
    "SuiteConfig",
    "SuiteReport",
    "__version__",
    "build_config",
    "hesse_cubic",
    "report_document",
    "run_suite",
]
