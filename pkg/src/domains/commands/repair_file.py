from pathlib import Path
from typing import Optional

from src.domains.parsing.load_document import parse_errors_to_diagnostics, write_document
from src.domains.parsing.parse_document import parse
from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.escape_source import escape_source
from src.domains.repairs.plan_repairs import plan
from src.domains.validation.validate_document import validate
from src.lib.utils.errors import FatalParseError, IrreparableError
from src.lib.utils.logger import get_logger
from src.middlewares.error_handler import describe_error, handle_command_error
from src.middlewares.requests_logger import log_file_run
from src.models.diagnostic import error_codes, has_errors
from src.models.parse import ParseMode
from src.models.repair import RepairConfig
from src.models.report import FileReport

logger = get_logger(__name__)


def output_path(path: str, in_place: bool, out_dir: Optional[str]) -> Optional[Path]:
    if in_place:
        return Path(path)
    if out_dir:
        return Path(out_dir) / Path(path).name
    return None


@log_file_run
def repair_file(path: str, cfg: RepairConfig, in_place: bool = False, out_dir: Optional[str] = None) -> FileReport:
    """Repair one file. Without a destination the plan is reported and nothing is written.

    Irreparable files are never written. An in-place file needing no action is left untouched.
    """
    escapes = []
    try:
        data, escapes = escape_source(Path(path).read_bytes())
        doc, errors = parse(data, ParseMode.LENIENT)
        if doc is None:
            raise FatalParseError(errors)
        actions = plan(doc, cfg)
        repaired = apply_actions(doc, actions)
        diagnostics = validate(repaired)
        if has_errors(diagnostics):
            raise IrreparableError(error_codes(diagnostics), actions, repaired)
        target = output_path(path, in_place, out_dir)
        if target is not None and (actions or escapes or not in_place):
            target.parent.mkdir(parents=True, exist_ok=True)
            write_document(repaired, target)
    except IrreparableError as exc:
        handle_command_error(exc, path)
        remaining = validate(exc.document) if exc.document is not None else []
        return FileReport(path=path, diagnostics=remaining, actions=[*escapes, *exc.actions], irreparable=exc.codes)
    except FatalParseError as exc:
        handle_command_error(exc, path)
        return FileReport(
            path=path, diagnostics=parse_errors_to_diagnostics(exc.errors), actions=escapes,
            error=describe_error(exc), fatal=True,
        )
    except Exception as exc:
        handle_command_error(exc, path)
        return FileReport(path=path, actions=escapes, error=describe_error(exc), fatal=True)

    return FileReport(path=path, strict=not has_errors(diagnostics), diagnostics=diagnostics, actions=[*escapes, *actions])
