import json
import sys

from rich.console import Console
from rich.table import Table
from rich.text import Text

from src.lib.utils import config
from src.models.diagnostic import RULES, Diagnostic, Severity
from src.models.repair import RepairAction
from src.models.report import RunReport

SEVERITY_STYLES = {Severity.ERROR: 'bold red', Severity.WARNING: 'yellow', Severity.INFO: 'cyan'}


def make_console(stderr: bool = False) -> Console:
    return Console(
        stderr=stderr,
        color_system=None if config.NO_COLOR else 'auto',
        highlight=False,
        soft_wrap=True,
    )


def plural(count: int, noun: str) -> str:
    return f'{count} {noun}' if count == 1 else f'{count} {noun}s'


def diagnostic_line(path: str, d: Diagnostic) -> Text:
    """`path:line:column: CODE severity message [ids]`"""
    line = Text.assemble(
        f'{path}:{d.position.line}:{d.position.column}: ',
        (d.code, SEVERITY_STYLES[d.severity]),
        ' ',
        (str(d.severity), SEVERITY_STYLES[d.severity]),
        f' {d.message}',
    )
    if d.involved_ids:
        line.append(f' [{", ".join(d.involved_ids)}]', style='dim')
    return line


def action_line(path: str, action: RepairAction) -> Text:
    return Text.assemble(
        f'{path}:{action.position.line}:{action.position.column}: ',
        (str(action.kind), 'green'),
        f' {action.before!r} -> {action.after!r}',
        (f' ({action.rationale})', 'dim'),
    )


def summary_line(report: RunReport) -> str:
    return ', '.join([
        plural(len(report.files), 'file'),
        plural(report.count(Severity.ERROR), 'error'),
        plural(report.count(Severity.WARNING), 'warning'),
    ])


def aggregate_table(report: RunReport) -> Table:
    table = Table(title='Diagnostics by code')
    table.add_column('code')
    table.add_column('severity')
    table.add_column('count', justify='right')
    for code, count in report.aggregate.items():
        table.add_row(code, str(RULES[code].severity), str(count))
    return table


def render_text(report: RunReport, show_actions: bool = False):
    """Human readable report on stdout; operational errors go to stderr."""
    out, err = make_console(), make_console(stderr=True)
    for file in report.files:
        if file.error:
            err.print(Text(f'{file.path}: {file.error}', style='red'))
        if show_actions:
            for action in file.actions:
                out.print(action_line(file.path, action))
        for d in file.diagnostics:
            out.print(diagnostic_line(file.path, d))
        if file.irreparable:
            out.print(Text(f'{file.path}: irreparable {", ".join(file.irreparable)}', style='bold red'))
    if report.aggregate:
        out.print(aggregate_table(report))
    out.print(summary_line(report))


def render_json(report: RunReport):
    """The whole stdout payload: one JSON document, keys sorted so reruns are byte-identical."""
    sys.stdout.write(json.dumps(report.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + '\n')


def render(report: RunReport, as_json: bool, show_actions: bool = False):
    if as_json:
        render_json(report)
    else:
        render_text(report, show_actions)
