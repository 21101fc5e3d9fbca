"""
Verification Module - reports and suite orchestration

Suites live in verification.suites and are imported on demand by the CLI,
so that numerical modules can depend on the report types without cycles.
"""
from verification.report import VerificationReport, ReportStatus, assert_passed, status_from_error

__all__ = [
    'VerificationReport',
    'ReportStatus',
    'assert_passed',
    'status_from_error'
]
