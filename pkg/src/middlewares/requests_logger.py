import time
from functools import wraps
from typing import Callable

from src.models.report import FileReport

from ..lib.utils.logger import clear_current_file, get_logger, set_current_file

logger = get_logger('files')


def log_file_run(func: Callable[..., FileReport]) -> Callable[..., FileReport]:
    """Tag every log line of a per-file job with its path and log the outcome with timing."""

    @wraps(func)
    def wrapper(path: str, **kwargs) -> FileReport:
        set_current_file(path)
        start_time = time.time()
        try:
            report = func(path=path, **kwargs)
            duration = time.time() - start_time
            logger.info(f'{func.__name__} {path} -> exit {report.exit_code} [{duration:.2f}s]')
            return report
        finally:
            clear_current_file()

    return wrapper
