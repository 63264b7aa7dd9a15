from src.domains.commands.collect_paths import collect_paths
from src.domains.commands.render_report import render
from src.domains.commands.validate_file import validate_file
from src.lib.task.task_manager import TaskManager
from src.models.diagnostic import ValidationOptions
from src.models.report import RunReport


def run_validation(paths: list[str], options: ValidationOptions) -> RunReport:
    files = TaskManager().run_all(validate_file, ({'path': path, 'options': options} for path in collect_paths(paths)))
    return RunReport(files=files)


def cmd_validate(paths: list[str], as_json: bool = False, consistency: bool = False, extent_info: bool = False) -> int:
    """Check files for TimeML-strict conformance.

    Exit 0 when every file is strict, 1 when any has an ERROR, 2 on I/O or fatal parse failure.
    """
    options = ValidationOptions(enable_consistency_lint=consistency, enable_extent_info=extent_info)
    report = run_validation(paths, options)
    render(report, as_json)
    return report.exit_code
