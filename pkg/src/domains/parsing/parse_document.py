from typing import Optional

from lxml import etree

from src.domains.documents.collect_ids import collect_ids
from src.domains.validation.check_references import check_references
from src.domains.validation.check_schema import check_schema
from src.lib.utils.logger import get_logger
from src.lib.xml.scanner import PositionTable, Token, scan
from src.lib.xml.source import DecodeFailure, decode_source
from src.lib.xml.text import decode_attribute, decode_text, secure_parser
from src.models.diagnostic import Diagnostic
from src.models.document import (
    DctBlock, Document, EntityRef, Event, EventInstance, InstanceAttrs, LIST_FIELDS, Link,
    MarkupSegment, RawSegment, Segment, Signal, SourcePosition, TextRegion, Timex3, UnknownNode,
)
from src.models.parse import ParseError, ParseErrorCategory, ParseMode
from src.models.timeml import (
    ANNOTATION_ELEMENTS, INSTANCE_ATTRIBUTES, LINK_ATTRIBUTES, LINK_ELEMENTS, LinkKind,
    SOURCE_SLOTS, TARGET_SLOTS, TIMEML_ELEMENTS, allowed_attributes,
)

logger = get_logger(__name__)

EMPTY_ELEMENTS = LINK_ELEMENTS | {'MAKEINSTANCE'}
ANNOTATION_MODELS = {'EVENT': Event, 'TIMEX3': Timex3, 'SIGNAL': Signal}

CATEGORY_BY_CODE = {
    'E003': ParseErrorCategory.MISSING_REQUIRED_ATTRIBUTE,
    'E004': ParseErrorCategory.BAD_ATTRIBUTE_VALUE,
    'E010': ParseErrorCategory.BAD_ATTRIBUTE_VALUE,
    'E012': ParseErrorCategory.BAD_ATTRIBUTE_VALUE,
}


class DocumentBuilder:
    """Builds a Document from the scanned tokens of well-formed source.

    Contexts: ROOT (root element body), META (inside a metadata element
    outside TEXT), TEXT and DCT.
    """

    def __init__(self, text: str, table: PositionTable):
        self.text = text
        self.table = table
        self.tokens = scan(text)
        self.cursor = 0
        self.lists: dict[str, list] = {tag: [] for tag in LIST_FIELDS}
        self.unknown_nodes: list[UnknownNode] = []
        self.source_map: dict[str, SourcePosition] = {}
        self.closing: Optional[Token] = None

    def build(self) -> Document:
        doctype = None
        while self.tokens[self.cursor].kind != 'start':
            if self.tokens[self.cursor].kind == 'doctype':
                doctype = self.tokens[self.cursor].source
            self.cursor += 1

        root = self._next()
        if root.name != 'TimeML':
            self._unknown(root, 'DOCUMENT')
        root_attributes = {a.name: decode_attribute(a.raw_value) for a in root.attributes}
        content = [] if root.empty else self._content('ROOT')

        return Document(
            doctype=doctype,
            root_name=root.name,
            root_attributes=root_attributes,
            content=content,
            unknown_nodes=self.unknown_nodes,
            source_map=self.source_map,
            **{LIST_FIELDS[tag]: items for tag, items in self.lists.items()},
        )

    def _next(self) -> Token:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def _position(self, index: int) -> SourcePosition:
        return self.table.at(index)

    def _content(self, context: str) -> list[Segment]:
        """Segments up to the end tag closing the current element, which is consumed."""
        segments: list[Segment] = []
        pending: list[str] = []
        while True:
            token = self._next()
            if token.kind in ('text', 'cdata'):
                pending.append(token.source)
                continue
            if pending:
                raw = ''.join(pending)
                segments.append(RawSegment(text=decode_text(raw), raw=raw))
                pending = []
            if token.kind == 'end':
                self.closing = token
                return segments
            if token.kind in ('comment', 'pi'):
                segments.append(MarkupSegment(markup=token.source))
            elif token.kind == 'start':
                segments.extend(self._element(token, context))

    def _element(self, token: Token, context: str) -> list[Segment]:
        name = token.name
        outside_text = context in ('ROOT', 'META')
        if name == 'TEXT' and outside_text:
            return [self._region(token, 'TEXT')]
        if name == 'DCT' and context != 'DCT':
            return [self._region(token, 'DCT')]
        if context == 'DCT':
            if name == 'TIMEX3':
                return [self._annotation(token)]
            if name not in TIMEML_ELEMENTS:
                self._unknown(token, 'DCT')
            # misplaced TimeML elements are stray DCT content
            return self._markup(token, context)
        if name in ANNOTATION_ELEMENTS:
            return [self._annotation(token)]
        if name in EMPTY_ELEMENTS:
            return [self._empty_element(token)]
        if outside_text and name not in TIMEML_ELEMENTS and not self._is_empty(token):
            # preamble metadata such as DOCNO headers
            return self._markup(token, 'META')
        self._unknown(token, 'TEXT' if context == 'TEXT' else 'TimeML')
        return self._markup(token, context)

    def _is_empty(self, token: Token) -> bool:
        if token.empty:
            return True
        following = self.tokens[self.cursor]
        if following.kind == 'end':
            return True
        return (
            following.kind == 'text' and not following.source.strip()
            and self.tokens[self.cursor + 1].kind == 'end'
        )

    def _markup(self, token: Token, context: str) -> list[Segment]:
        segments: list[Segment] = [MarkupSegment(markup=token.source)]
        if token.empty:
            return segments
        segments.extend(self._content(context))
        segments.append(MarkupSegment(markup=self.closing.source))
        return segments

    def _unknown(self, token: Token, context: str, name: Optional[str] = None):
        key = f'UNKNOWN:{len(self.unknown_nodes)}'
        self.source_map[key] = self._position(token.start)
        self.unknown_nodes.append(UnknownNode(name=name or token.name, context=context, key=key))

    def _reserve(self, tag: str, token: Token) -> tuple[int, str]:
        index = len(self.lists[tag])
        self.lists[tag].append(None)
        key = f'{tag}:{index}'
        self.source_map[key] = self._position(token.start)
        return index, key

    def _attributes(self, token: Token, key: str) -> dict[str, str]:
        values = {}
        for attr in token.attributes:
            self.source_map[f'{key}@{attr.name}'] = self._position(attr.start)
            values[attr.name] = decode_attribute(attr.raw_value)
        return values

    def _region(self, token: Token, tag: str) -> EntityRef:
        index, key = self._reserve(tag, token)
        extra = self._attributes(token, key)
        content = [] if token.empty else self._content(tag)
        model = TextRegion if tag == 'TEXT' else DctBlock
        self.lists[tag][index] = model(content=content, extra=extra)
        return EntityRef(tag=tag, index=index)

    def _skip_children(self, tag: str) -> Token:
        """Consume an element body, reporting nested elements; returns the closing tag."""
        depth = 0
        while True:
            token = self._next()
            if token.kind == 'start':
                self._unknown(token, tag)
                if not token.empty:
                    depth += 1
            elif token.kind == 'end':
                if depth == 0:
                    return token
                depth -= 1

    def _annotation(self, token: Token) -> EntityRef:
        tag = token.name
        index, key = self._reserve(tag, token)
        attributes = self._attributes(token, key)
        raw = None
        if not token.empty:
            closing = self._skip_children(tag)
            raw = self.text[token.end:closing.start]
        data = _split_attributes(tag, attributes)
        if tag == 'EVENT':
            instance = {name: data.pop(name) for name in INSTANCE_ATTRIBUTES if name in data}
            if instance:
                data['inline_instance'] = InstanceAttrs.model_validate(instance)
        surface = decode_text(raw) if raw else ''
        self.lists[tag][index] = ANNOTATION_MODELS[tag].model_validate({**data, 'surface_text': surface, 'raw': raw})
        return EntityRef(tag=tag, index=index)

    def _empty_element(self, token: Token) -> EntityRef:
        tag = token.name
        index, key = self._reserve(tag, token)
        attributes = self._attributes(token, key)
        if not token.empty:
            closing = self._skip_children(tag)
            if self.text[token.end:closing.start].strip() and not _has_markup(self.text[token.end:closing.start]):
                self._unknown(token, tag, name='#text')
        if tag == 'MAKEINSTANCE':
            item = EventInstance.model_validate(_split_attributes(tag, attributes))
        else:
            item = _build_link(LinkKind(tag), attributes)
        self.lists[tag][index] = item
        return EntityRef(tag=tag, index=index)


def _has_markup(source: str) -> bool:
    return '<' in source


def _split_attributes(tag: str, attributes: dict[str, str]) -> dict:
    allowed = allowed_attributes(tag)
    data = {name: value for name, value in attributes.items() if name in allowed}
    data['extra'] = {name: value for name, value in attributes.items() if name not in allowed}
    return data


def _build_link(kind: LinkKind, attributes: dict[str, str]) -> Link:
    data = {name: attributes[name] for name in LINK_ATTRIBUTES if name in attributes}
    extra = {name: value for name, value in attributes.items() if name not in allowed_attributes(kind)}
    for side, slots in (('source', SOURCE_SLOTS[kind]), ('target', TARGET_SLOTS[kind])):
        given = [name for name in attributes if name in slots]
        if given:
            data[side] = attributes[given[0]]
            data[f'{side}_slot'] = given[0]
        # a second endpoint on the same side is not part of the link
        for name in given[1:]:
            extra[name] = attributes[name]
    return Link.model_validate({**data, 'kind': kind, 'extra': extra})


def schema_errors(doc: Document) -> list[ParseError]:
    """Element-level deviations of a built document, as parse errors."""
    diagnostics = [
        *check_schema(doc),
        *(d for d in check_references(doc, collect_ids(doc)) if d.code == 'E012'),
    ]
    errors = [_to_parse_error(d) for d in diagnostics]
    return sorted(errors, key=lambda e: (e.position.offset, e.category))


def _to_parse_error(diagnostic: Diagnostic) -> ParseError:
    if diagnostic.code == 'E002':
        category = ParseErrorCategory.UNKNOWN_ATTRIBUTE if diagnostic.attribute else ParseErrorCategory.UNKNOWN_ELEMENT
    else:
        category = CATEGORY_BY_CODE[diagnostic.code]
    return ParseError(category=category, message=diagnostic.message, position=diagnostic.position)


def _fatal(category: ParseErrorCategory, message: str, position: SourcePosition) -> tuple[None, list[ParseError]]:
    logger.info(f'{category}: {message} at {position.line}:{position.column}')
    return None, [ParseError(category=category, message=message, position=position)]


def parse(data: bytes, mode: ParseMode = ParseMode.STRICT) -> tuple[Optional[Document], list[ParseError]]:
    """Read TimeML bytes into a Document.

    NOT_WELL_FORMED and BAD_ENCODING are fatal in both modes. STRICT returns
    no Document as soon as any deviation exists; LENIENT returns a best-effort
    Document together with every deviation.
    """
    try:
        text, codec, bom = decode_source(data)
    except DecodeFailure as exc:
        prefix = data[:exc.offset].decode('utf-8', errors='replace')
        table = PositionTable(prefix, 'utf-8')
        return _fatal(ParseErrorCategory.BAD_ENCODING, exc.message, table.at(len(prefix)).model_copy(update={'offset': exc.offset}))

    table = PositionTable(text, codec, bom)
    try:
        etree.fromstring(data, secure_parser())
    except etree.XMLSyntaxError as exc:
        line, column = exc.position if exc.position else (1, 1)
        category = ParseErrorCategory.NOT_WELL_FORMED
        if 'encoding' in (exc.msg or '').lower():
            category = ParseErrorCategory.BAD_ENCODING
        return _fatal(category, exc.msg or 'document is not well-formed', table.at_line(line or 1, column or 1))

    doc = DocumentBuilder(text, table).build()
    errors = schema_errors(doc)
    logger.debug(f'parsed {len(doc.events)} events, {len(doc.timexes)} timexes, {len(doc.links)} links, {len(errors)} deviations')
    if mode == ParseMode.STRICT and errors:
        return None, errors
    return doc, errors
