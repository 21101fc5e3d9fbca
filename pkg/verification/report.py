"""
Verification Reports
One record per named check: status, worst error and a diagnostic payload
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from errors import VerificationError


class ReportStatus(Enum):
    """Outcome of a check; REPORT marks informational checks that never fail a run"""
    PASS = "pass"
    FAIL = "fail"
    REPORT = "report"


def _plain(value: Any) -> Any:
    """Convert numpy / complex values into JSON-friendly Python values"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': float(value.real), 'im': float(value.imag)}
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass
class VerificationReport:
    """Result of one verification check"""
    check: str
    family: str
    params: Dict[str, float]
    status: ReportStatus
    max_error: Optional[float]
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def asserted(self) -> bool:
        """Whether the check counts towards the run's exit status"""
        return self.status is not ReportStatus.REPORT

    @property
    def passed(self) -> bool:
        return self.status is not ReportStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        """Export report as dictionary (stable key order)"""
        return {
            'check': self.check,
            'family': self.family,
            'params': _plain(self.params),
            'status': self.status.value,
            'max_error': _plain(self.max_error),
            'details': _plain(self.details),
        }


def status_from_error(max_error: float, tol: float) -> ReportStatus:
    """PASS when the worst error is finite and within tolerance"""
    if max_error is None or not math.isfinite(max_error) or max_error >= tol:
        return ReportStatus.FAIL
    return ReportStatus.PASS


def assert_passed(reports: List[VerificationReport]) -> None:
    """
    Raise when any asserted check failed; informational reports are ignored

    Raises:
        VerificationError: carrying the failed reports
    """
    failed = [r for r in reports if r.asserted and not r.passed]
    if failed:
        names = ", ".join(f"{r.check}[{r.family}]" for r in failed)
        raise VerificationError(f"{len(failed)} asserted check(s) failed: {names}", reports=failed)
