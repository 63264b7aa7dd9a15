from collections import Counter
from typing import Optional

from pydantic import BaseModel, computed_field

from src.lib.utils.errors import EXIT_FATAL, EXIT_FINDINGS, EXIT_SUCCESS
from src.models.diagnostic import Diagnostic, Severity
from src.models.repair import RepairAction


class FileReport(BaseModel):
    """Outcome of one command over one file.

    Attributes:
        path: File path as given on the command line (or found in a directory)
        strict: True when the file (after repair, for repair runs) is TimeML-strict
        diagnostics: Positioned findings, sorted
        actions: Repair actions, for repair runs
        irreparable: Error codes that repair could not remove
        error: Operational error message (I/O, fatal parse), if any
        fatal: True when the file could not be processed at all
    """
    path: str
    strict: bool = False
    diagnostics: list[Diagnostic] = []
    actions: list[RepairAction] = []
    irreparable: list[str] = []
    error: Optional[str] = None
    fatal: bool = False

    def count(self, severity: Severity) -> int:
        return sum(1 for d in self.diagnostics if d.severity == severity)

    @property
    def exit_code(self) -> int:
        if self.fatal:
            return EXIT_FATAL
        if self.irreparable or self.count(Severity.ERROR):
            return EXIT_FINDINGS
        return EXIT_SUCCESS

    def to_json(self) -> dict:
        return {
            'path': self.path,
            'strict': self.strict,
            'diagnostics': [d.to_json() for d in self.diagnostics],
            'actions': [a.to_json() for a in self.actions],
            'irreparable': list(self.irreparable),
            'error': self.error,
        }


class RunReport(BaseModel):
    """Per-file reports of a command run, in path order, with code counts.

    Attributes:
        files: One report per processed file
    """
    files: list[FileReport] = []

    @computed_field
    @property
    def aggregate(self) -> dict[str, int]:
        counts = Counter(d.code for report in self.files for d in report.diagnostics)
        return dict(sorted(counts.items()))

    @property
    def exit_code(self) -> int:
        # fatal dominates findings
        return max((report.exit_code for report in self.files), default=EXIT_SUCCESS)

    def count(self, severity: Severity) -> int:
        return sum(report.count(severity) for report in self.files)

    def to_json(self) -> dict:
        return {
            'files': [report.to_json() for report in self.files],
            'aggregate': self.aggregate,
        }
