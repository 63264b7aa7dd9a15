from src.domains.parsing.load_document import load_document, parse_errors_to_diagnostics
from src.domains.validation.validate_document import validate
from src.lib.utils.errors import FatalParseError
from src.middlewares.error_handler import describe_error, handle_command_error
from src.middlewares.requests_logger import log_file_run
from src.models.diagnostic import ValidationOptions, has_errors
from src.models.parse import ParseMode
from src.models.report import FileReport


@log_file_run
def validate_file(path: str, options: ValidationOptions) -> FileReport:
    """Validate one file; fatal parse and I/O failures become a fatal report."""
    try:
        doc, _ = load_document(path, ParseMode.LENIENT)
        diagnostics = validate(doc, options)
    except FatalParseError as exc:
        handle_command_error(exc, path)
        return FileReport(path=path, diagnostics=parse_errors_to_diagnostics(exc.errors), error=describe_error(exc), fatal=True)
    except Exception as exc:
        handle_command_error(exc, path)
        return FileReport(path=path, error=describe_error(exc), fatal=True)
    return FileReport(path=path, strict=not has_errors(diagnostics), diagnostics=diagnostics)
