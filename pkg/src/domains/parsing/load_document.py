from pathlib import Path
from typing import Optional

from src.domains.parsing.parse_document import parse
from src.domains.parsing.serialize_document import serialize
from src.lib.utils.errors import FatalParseError
from src.lib.utils.logger import get_logger
from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import Document
from src.models.parse import ParseError, ParseMode

logger = get_logger(__name__)


def load_document(path: str | Path, mode: ParseMode = ParseMode.LENIENT) -> tuple[Optional[Document], list[ParseError]]:
    """Read and parse a file. Raises FatalParseError when no Document can exist."""
    data = Path(path).read_bytes()
    doc, errors = parse(data, mode)
    if any(error.fatal for error in errors):
        raise FatalParseError(errors)
    return doc, errors


def write_document(doc: Document, path: str | Path) -> None:
    Path(path).write_bytes(serialize(doc))
    logger.info(f'wrote {path}')


def parse_errors_to_diagnostics(errors: list[ParseError]) -> list[Diagnostic]:
    """Fatal parse errors become E001; schema-level ones are reported by validation."""
    return [
        diagnostic('E001', f'{error.category}: {error.message}', error.position)
        for error in errors
        if error.fatal
    ]
