"""
Terminal Output for GenOsc
Table writers (CSV/JSON) for data on stdout or --out, and a coloured
verification summary on stderr
"""
import csv
import io
import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, TextIO

import orjson
from colorama import Fore, Style, init

from config import Config
from verification.report import ReportStatus, VerificationReport

# Initialize colorama (no autoreset: the summary resets explicitly)
init()


def format_real(value) -> str:
    """Shortest round-trip text of a real number"""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_real(v) for v in row])
    return buffer.getvalue()


def render_json_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    payload = {
        'columns': list(header),
        'rows': [[v if isinstance(v, int) else float(v) for v in row] for row in rows],
    }
    return orjson.dumps(payload, option=orjson.OPT_INDENT_2).decode() + "\n"


def render_reports(reports: List[VerificationReport]) -> str:
    return orjson.dumps([r.to_dict() for r in reports], option=orjson.OPT_INDENT_2).decode() + "\n"


def emit(text: str, out_path: Optional[str] = None, stream: Optional[TextIO] = None):
    """Write data to a file when out_path is given, else to stdout"""
    if out_path:
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        (stream or sys.stdout).write(text)


def write_table(header: Sequence[str], rows: List[Sequence], output_format: str = "csv",
                out_path: Optional[str] = None):
    """Emit a table as CSV (header row first) or as JSON {columns, rows}"""
    if output_format == "json":
        emit(render_json_table(header, rows), out_path)
    else:
        emit(render_csv(header, rows), out_path)


class SummaryPrinter:
    """Pass/fail digest of a verification run, printed to stderr"""

    def __init__(self, use_color: bool = None, stream: Optional[TextIO] = None):
        self.use_color = use_color if use_color is not None else Config.USE_COLOR
        self.stream = stream or sys.stderr

    def _paint(self, text: str, color: str) -> str:
        if self.use_color:
            return f"{color}{text}{Style.RESET_ALL}"
        return text

    def _status_tag(self, status: ReportStatus) -> str:
        color = {
            ReportStatus.PASS: Fore.GREEN,
            ReportStatus.FAIL: Fore.RED,
            ReportStatus.REPORT: Fore.CYAN,
        }[status]
        return self._paint(f"[{status.value.upper():6}]", color)

    def print_summary(self, reports: List[VerificationReport]):
        """One line per report, then the totals"""
        for report in reports:
            params = ",".join(f"{k}={v:g}" for k, v in sorted(report.params.items()))
            label = f"{report.check} {report.family}" + (f"({params})" if params else "")
            error = "-" if report.max_error is None else f"{report.max_error:.3e}"
            print(f"{self._status_tag(report.status)} {label:<44} max_error={error}", file=self.stream)

        failed = sum(1 for r in reports if r.asserted and not r.passed)
        passed = sum(1 for r in reports if r.asserted and r.passed)
        informational = sum(1 for r in reports if not r.asserted)
        totals = f"{passed} passed, {failed} failed, {informational} reported"
        color = Fore.RED if failed else Fore.GREEN
        print(self._paint(totals, Style.BRIGHT + color), file=self.stream)
