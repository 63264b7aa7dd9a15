from src.domains.commands.cmd_validate import run_validation
from src.domains.commands.render_report import render
from src.models.diagnostic import ValidationOptions


def cmd_lint(paths: list[str], as_json: bool = False) -> int:
    """Validate with the temporal consistency lint on.

    W101 warnings never fail the run; ERROR diagnostics still do.
    """
    report = run_validation(paths, ValidationOptions(enable_consistency_lint=True))
    render(report, as_json)
    return report.exit_code
