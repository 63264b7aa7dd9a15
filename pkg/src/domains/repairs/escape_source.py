import re

from lxml import etree

from src.lib.utils.logger import get_logger
from src.lib.xml.scanner import PositionTable
from src.lib.xml.source import BOM, DecodeFailure, declared_encoding, decode_source
from src.lib.xml.text import secure_parser
from src.models.repair import RepairAction, RepairActionKind

logger = get_logger(__name__)

# verbatim regions first, so their '&' and '<' are never touched
LEXEME = re.compile(
    r'<!--.*?-->|<!\[CDATA\[.*?\]\]>|<\?.*?\?>'
    r'|(?P<entity>&(?:[A-Za-z_:][\w.:-]*|#[0-9]+|#x[0-9A-Fa-f]+);)'
    r'|(?P<amp>&)|(?P<lt><(?![A-Za-z_:/!?]))',
    re.DOTALL,
)
REPLACEMENTS = {'amp': '&amp;', 'lt': '&lt;'}


def is_well_formed(data: bytes) -> bool:
    try:
        etree.fromstring(data, secure_parser())
    except etree.XMLSyntaxError:
        return False
    return True


def escape_source(data: bytes) -> tuple[bytes, list[RepairAction]]:
    """ESCAPE_CHARS pre-pass over raw input, run before LENIENT parsing.

    Undeclared input that is not UTF-8 is re-read as latin-1. On input that
    is not well-formed, every '&' starting no entity reference and every '<'
    starting no markup is escaped. Anything still broken is left to the parser.
    """
    actions = []
    try:
        text, codec, bom = decode_source(data)
    except DecodeFailure as exc:
        if declared_encoding(data) is not None:
            return data, []
        text, codec, bom = data.decode('latin-1'), 'utf-8', 0
        data = text.encode('utf-8')
        actions.append(RepairAction(
            kind=RepairActionKind.ESCAPE_CHARS,
            before='utf-8',
            after='latin-1',
            position=PositionTable(text, 'latin-1').at(exc.offset),
            rationale=f'{exc.message}; input re-read as latin-1 and written as UTF-8',
        ))

    if is_well_formed(data):
        return data, actions

    table = PositionTable(text, codec, bom)
    parts, cursor = [], 0
    for match in LEXEME.finditer(text):
        kind = match.lastgroup
        if kind not in REPLACEMENTS:
            continue
        parts.extend([text[cursor:match.start()], REPLACEMENTS[kind]])
        cursor = match.end()
        actions.append(RepairAction(
            kind=RepairActionKind.ESCAPE_CHARS,
            before=match.group(),
            after=REPLACEMENTS[kind],
            position=table.at(match.start()),
            rationale=f'bare "{match.group()}" is not allowed in character data',
        ))
    if cursor == 0:
        return data, actions
    parts.append(text[cursor:])
    escaped = ''.join(parts).encode(codec)
    logger.debug(f'escaped {len(actions)} characters')
    return (BOM if bom else b'') + escaped, actions
