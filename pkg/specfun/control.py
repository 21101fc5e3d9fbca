"""
Series control shared by every special-function routine
"""
from dataclasses import dataclass
from typing import Optional

from config import Config


@dataclass(frozen=True)
class SeriesControl:
    """Stopping rule for a power series: relative tolerance plus a hard term cap"""
    rel_tol: float
    max_terms: int

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be at least 1, got {self.max_terms}")


def default_control(rel_tol: Optional[float] = None) -> SeriesControl:
    """Control built from Config, optionally with a tighter/looser tolerance"""
    return SeriesControl(
        rel_tol=rel_tol if rel_tol is not None else Config.SERIES_REL_TOL,
        max_terms=Config.SERIES_MAX_TERMS,
    )
