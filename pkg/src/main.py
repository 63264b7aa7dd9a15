import argparse
import sys
from typing import Optional

from .lib.utils import config
from .lib.utils.errors import EXIT_FATAL
from .lib.utils.logger import get_logger
from .middlewares.error_handler import handle_command_error
from .router import register_routes

logger = get_logger('app')


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=config.APP_NAME,
        description='Validate, repair and lint TimeML documents against TimeML-strict.',
    )
    register_routes(parser)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Run one command and return its exit code: 0 clean, 1 findings, 2 fatal."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the fatal code
        return EXIT_FATAL if exc.code else 0

    logger.debug(f'🚀 {args.command} on {len(args.paths)} paths')
    try:
        return args.handler(args)
    except Exception as exc:
        return handle_command_error(exc)


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
