import re
import string

from src.domains.parsing.serialize_document import render_segment
from src.lib.utils.errors import UndecidableError
from src.lib.utils.logger import get_logger
from src.models.document import DOCUMENT_START, Document, EntityRef, MarkupSegment, RawSegment
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig, Span
from src.models.timeml import ANNOTATION_ELEMENTS

logger = get_logger(__name__)

BODY_WORDS = 5
OPEN_TAG = re.compile(r'<([A-Za-z_:][^\s/>]*)[^>]*(?<!/)>$')
CLOSE_TAG = re.compile(r'</([A-Za-z_:][^\s>]*)\s*>$')


def root_view(doc: Document) -> tuple[str, list[tuple[int, int]]]:
    """Root content as one string, with character data decoded, and the bounds of every segment."""
    parts, bounds, offset = [], [], 0
    for segment in doc.content:
        part = segment.text if isinstance(segment, RawSegment) else render_segment(doc, segment)
        parts.append(part)
        bounds.append((offset, offset + len(part)))
        offset += len(part)
    return ''.join(parts), bounds


def _is_alphabetic(token: str) -> bool:
    return token.strip(string.punctuation + '‘’“”').isalpha()


def is_body_line(line: str) -> bool:
    return sum(1 for token in line.split() if _is_alphabetic(token)) >= BODY_WORDS


def is_header_line(line: str) -> bool:
    """Metadata-looking lines: no lowercase letters, or mostly numbers and slugs."""
    tokens = line.split()
    if not tokens:
        return False
    if not any(c.islower() for c in line):
        return True
    coded = sum(1 for token in tokens if any(c.isdigit() or c == '-' for c in token))
    return coded * 2 >= len(tokens)


def _line_bounds(view: str, start: int, end: int) -> tuple[int, int]:
    line_start = view.rfind('\n', 0, start) + 1
    line_end = view.find('\n', end)
    return line_start, len(view) if line_end < 0 else line_end


def _trimmed(view: str, start: int, end: int) -> tuple[int, int]:
    """Drop blank lines at both ends; the span still starts at column 1 of its first line."""
    first = start
    while first < end and view[first].isspace():
        first += 1
    start = max(start, view.rfind('\n', 0, first) + 1)
    while end > start and view[end - 1].isspace():
        end -= 1
    return start, end


def _balanced(doc: Document, bounds: list[tuple[int, int]], span: tuple[int, int]) -> tuple[int, int]:
    """Shrink a span until the metadata tags inside it pair up."""
    start, end = span
    while True:
        inside = [i for i, (lo, hi) in enumerate(bounds) if hi > start and lo < end]
        stack: list[int] = []
        unmatched_close = None
        for i in inside:
            segment = doc.content[i]
            if not isinstance(segment, MarkupSegment):
                continue
            if CLOSE_TAG.match(segment.markup):
                if stack:
                    stack.pop()
                else:
                    unmatched_close = i
            elif OPEN_TAG.match(segment.markup) and not segment.markup.startswith(('<!', '<?')):
                stack.append(i)
        if unmatched_close is not None:
            start = bounds[unmatched_close][1]
        elif stack:
            end = bounds[stack[0]][0]
        else:
            return start, end


def _top_level_annotations(doc: Document, bounds: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Bounds of annotations directly in the root, skipping those inside metadata elements."""
    found, depth = [], 0
    for i, segment in enumerate(doc.content):
        if isinstance(segment, MarkupSegment):
            if CLOSE_TAG.match(segment.markup):
                depth = max(depth - 1, 0)
            elif OPEN_TAG.match(segment.markup) and not segment.markup.startswith(('<!', '<?')):
                depth += 1
        elif isinstance(segment, EntityRef) and segment.tag in ANNOTATION_ELEMENTS and depth == 0:
            found.append(bounds[i])
    return found


def wrap_text_heuristic(doc: Document) -> Span:
    """Find the body of a document that has no TEXT element.

    With annotations, the body is every line from the first to the last
    annotation outside metadata elements. Without any, it starts after the last header-like
    line preceding the first line of running prose, or covers everything when
    that prose line comes first. Raises UndecidableError otherwise.
    """
    view, bounds = root_view(doc)
    annotated = _top_level_annotations(doc, bounds)
    if annotated:
        start, end = _line_bounds(view, annotated[0][0], annotated[-1][1])
    else:
        lines = view.split('\n')
        starts = [0]
        for line in lines[:-1]:
            starts.append(starts[-1] + len(line) + 1)
        body = next((n for n, line in enumerate(lines) if is_body_line(line)), None)
        if body is None:
            raise UndecidableError('no annotations and no line of running text')
        before = [n for n in range(body) if lines[n].strip()]
        headers = [n for n in before if is_header_line(lines[n])]
        if not before:
            start = 0
        elif headers:
            start = starts[headers[-1] + 1]
        else:
            raise UndecidableError('no header boundary before the first line of running text')
        end = len(view)

    start, end = _balanced(doc, bounds, _trimmed(view, start, end))
    if start >= end:
        raise UndecidableError('the body span is empty')
    return Span(start=start, end=end)


def span_cuts(doc: Document, span: Span) -> dict:
    """Translate a span into the segment cuts of a 'wrap' edit.

    Cuts fall inside character data only; a span edge inside any other
    segment takes in that whole segment.
    """
    _, bounds = root_view(doc)

    def start_cut(offset: int) -> list[int]:
        for i, (lo, hi) in enumerate(bounds):
            if lo <= offset < hi:
                inner = offset - lo if isinstance(doc.content[i], RawSegment) else 0
                return [i, inner]
        return [len(bounds), 0]

    def end_cut(offset: int) -> list[int]:
        for i, (lo, hi) in enumerate(bounds):
            if lo < offset <= hi:
                inner = offset - lo if isinstance(doc.content[i], RawSegment) else 1
                return [i, inner]
        return [0, 0]

    return {'start': start_cut(span.start), 'end': end_cut(span.end)}


def wrap_text(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """WRAP_TEXT around the body of a document with no TEXT.

    An undecidable body leaves the document as is; E009 then makes it irreparable.
    """
    if doc.texts:
        return []
    try:
        span = wrap_text_heuristic(doc)
    except UndecidableError as exc:
        logger.info(f'no TEXT added: {exc.detail}')
        return []
    view, _ = root_view(doc)
    first_line = view[span.start:span.end].split('\n', 1)[0]
    return [RepairAction(
        kind=RepairActionKind.WRAP_TEXT,
        before='',
        after=f'<TEXT>{first_line[:40]}',
        position=DOCUMENT_START,
        rationale='document has no TEXT; the body starts at the line shown',
        edits=[Edit(op='wrap', value=span_cuts(doc, span))],
    )]
