from typing import Optional

from src.domains.commands.collect_paths import collect_paths
from src.domains.commands.render_report import render
from src.domains.commands.repair_file import repair_file
from src.lib.task.task_manager import TaskManager
from src.models.repair import RepairConfig
from src.models.report import RunReport


def cmd_repair(paths: list[str], in_place: bool = False, out_dir: Optional[str] = None,
               dry_run: bool = False, as_json: bool = False, cfg: Optional[RepairConfig] = None) -> int:
    """Repair files into TimeML-strict form, or print the plan with dry_run.

    Exit 0 when every file ends up strict, 1 when any is irreparable, 2 on I/O or fatal parse failure.
    """
    if dry_run:
        in_place, out_dir = False, None
    cfg = cfg or RepairConfig()
    payloads = (
        {'path': path, 'cfg': cfg, 'in_place': in_place, 'out_dir': out_dir}
        for path in collect_paths(paths)
    )
    report = RunReport(files=TaskManager().run_all(repair_file, payloads))
    render(report, as_json, show_actions=True)
    return report.exit_code
