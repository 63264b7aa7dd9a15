from src.lib.utils.errors import EXIT_FATAL, FatalParseError, IrreparableError, TimeMLError

from ..lib.utils.logger import get_logger

parse_error_logger = get_logger('FatalParseError')
repair_error_logger = get_logger('IrreparableError')
toolkit_error_logger = get_logger('TimeMLError')
io_error_logger = get_logger('OSError')
system_error_logger = get_logger('SystemException')


def handle_command_error(exc: Exception, path: str = '-') -> int:
    """Log an exception raised while processing a file and return its exit code."""
    if isinstance(exc, FatalParseError):
        parse_error_logger.error(f'⛔️ Cannot parse {path}: {exc.detail}')
        return exc.exit_code
    if isinstance(exc, IrreparableError):
        repair_error_logger.warning(f'⚠️ {path} stays invalid: {exc.detail}')
        return exc.exit_code
    if isinstance(exc, TimeMLError):
        toolkit_error_logger.error(f'⛔️ Error on {path}: {exc.detail}')
        return exc.exit_code
    if isinstance(exc, OSError):
        io_error_logger.error(f'⛔️ Cannot access {path}: {exc.strerror or exc}')
        return EXIT_FATAL
    system_error_logger.critical(f'🔥 Unexpected error on {path}: {exc!r}')
    return EXIT_FATAL


def describe_error(exc: Exception) -> str:
    """One-line message for the report's `error` field."""
    if isinstance(exc, TimeMLError):
        return exc.detail
    if isinstance(exc, OSError):
        return f'{exc.strerror or exc}: {exc.filename}' if exc.filename else str(exc)
    return f'{type(exc).__name__}: {exc}'
