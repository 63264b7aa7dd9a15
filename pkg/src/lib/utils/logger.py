import logging
import sys
from logging.handlers import RotatingFileHandler
import contextvars

from src.lib.utils import config

LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] [%(current_file)s] - [%(message)s]"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

_current_file_ctx = contextvars.ContextVar('current_file', default='-')


class CurrentFileFilter(logging.Filter):
    def filter(self, record):
        record.current_file = current_file()
        return True


def get_logger(name: str = 'tmlstrict'):
    logger = logging.getLogger(name)
    logger.setLevel(config.LOG_LEVEL)

    if not logger.handlers:
        # stdout carries reports; logs go to stderr only
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.addFilter(CurrentFileFilter())
        console_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
        logger.addHandler(console_handler)

        if config.LOG_FILE:
            file_handler = RotatingFileHandler(
                config.LOG_FILE, maxBytes=5*1024*1024, backupCount=5
            )
            file_handler.addFilter(CurrentFileFilter())
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
            logger.addHandler(file_handler)

    return logger


def set_current_file(path: str):
    _current_file_ctx.set(path)


def current_file() -> str:
    return _current_file_ctx.get()


def clear_current_file():
    _current_file_ctx.set('-')
