from enum import StrEnum
from typing import Annotated, Any, Iterator, Literal, Optional, Union

from pydantic import Field

from src.lib.utils import config
from src.models.entity import Annotation, TextBearing, TimeMLModel
from src.models.timeml import LinkKind, UNKNOWN_DCT_VALUE


class SourcePosition(TimeMLModel):
    """Position of a node in the original input.

    Attributes:
        offset: 0-based byte offset into the input
        line: 1-based line
        column: 1-based column (in characters)
        synthetic: True for nodes created by a transformation rather than parsed
    """
    offset: int = 0
    line: int = 1
    column: int = 1
    synthetic: bool = False


SYNTHETIC = SourcePosition(synthetic=True)
DOCUMENT_START = SourcePosition()


class RawSegment(TimeMLModel):
    """Character data. `text` is decoded; `raw` is the verbatim source spelling."""
    kind: Literal['raw'] = 'raw'
    text: str
    raw: Optional[str] = None


class MarkupSegment(TimeMLModel):
    """Markup that is not modelled (comments, metadata elements), kept verbatim."""
    kind: Literal['markup'] = 'markup'
    markup: str


class EntityRef(TimeMLModel):
    """Handle to an element stored in one of the Document lists.

    Attributes:
        tag: Element name (EVENT, TIMEX3, SIGNAL, MAKEINSTANCE, TLINK, SLINK, ALINK, DCT, TEXT)
        index: Position in the list holding that element
        inline: For EVENT handles, points at the instance declared on the EVENT itself
    """
    kind: Literal['ref'] = 'ref'
    tag: str
    index: int
    inline: bool = False

    @property
    def key(self) -> str:
        return f'{self.tag}:{self.index}'


Segment = Annotated[Union[RawSegment, MarkupSegment, EntityRef], Field(discriminator='kind')]


class InstanceAttrs(TimeMLModel):
    """Event instance attributes declared inline on an EVENT."""
    eiid: Optional[str] = None
    tense: Optional[str] = None
    aspect: Optional[str] = None
    polarity: Optional[str] = None
    pos: Optional[str] = None
    modality: Optional[str] = None
    v_form: Optional[str] = Field(None, alias='vForm')
    pred: Optional[str] = None
    cardinality: Optional[str] = None

    def attributes(self) -> dict[str, str]:
        return self.model_dump(by_alias=True, exclude_none=True, include=_INSTANCE_FIELDS)


_INSTANCE_FIELDS = {'eiid', 'tense', 'aspect', 'polarity', 'pos', 'modality', 'v_form', 'pred', 'cardinality'}


class Event(TextBearing):
    TAG = 'EVENT'

    eid: Optional[str] = None
    event_class: Optional[str] = Field(None, alias='class')
    stem: Optional[str] = None
    comment: Optional[str] = None
    inline_instance: Optional[InstanceAttrs] = None

    def attributes(self) -> dict[str, str]:
        data = super().attributes()
        if self.inline_instance is not None:
            data.update(self.inline_instance.attributes())
        return data

    def instance(self) -> Optional['EventInstance']:
        if self.inline_instance is None:
            return None
        return EventInstance(
            **self.inline_instance.model_dump(),
            event_id=self.eid,
            origin=InstanceOrigin.INLINE,
        )


class Timex3(TextBearing):
    TAG = 'TIMEX3'

    tid: Optional[str] = None
    timex_type: Optional[str] = Field(None, alias='type')
    value: Optional[str] = None
    mod: Optional[str] = None
    quant: Optional[str] = None
    freq: Optional[str] = None
    temporal_function: Optional[str] = Field(None, alias='temporalFunction')
    function_in_document: Optional[str] = Field(None, alias='functionInDocument')
    anchor_time_id: Optional[str] = Field(None, alias='anchorTimeID')
    begin_point: Optional[str] = Field(None, alias='beginPoint')
    end_point: Optional[str] = Field(None, alias='endPoint')
    value_from_function: Optional[str] = Field(None, alias='valueFromFunction')
    comment: Optional[str] = None

    @property
    def is_unknown_form(self) -> bool:
        """True for the underspecified DCT timex: value XXXX-XX-XX with no extent."""
        return (
            self.value == UNKNOWN_DCT_VALUE
            and not self.surface_text
            and self.function_in_document in (None, 'CREATION_TIME')
        )


class Signal(TextBearing):
    TAG = 'SIGNAL'

    sid: Optional[str] = None
    comment: Optional[str] = None


class InstanceOrigin(StrEnum):
    INLINE = 'INLINE'
    MAKEINSTANCE = 'MAKEINSTANCE'


class EventInstance(Annotation):
    TAG = 'MAKEINSTANCE'

    eiid: Optional[str] = None
    event_id: Optional[str] = Field(None, alias='eventID')
    signal_id: Optional[str] = Field(None, alias='signalID')
    tense: Optional[str] = None
    aspect: Optional[str] = None
    polarity: Optional[str] = None
    pos: Optional[str] = None
    modality: Optional[str] = None
    v_form: Optional[str] = Field(None, alias='vForm')
    pred: Optional[str] = None
    cardinality: Optional[str] = None
    comment: Optional[str] = None
    origin: InstanceOrigin = InstanceOrigin.MAKEINSTANCE

    def instance_attrs(self) -> InstanceAttrs:
        return InstanceAttrs(**self.model_dump(include=_INSTANCE_FIELDS))


class Link(Annotation):
    """TLINK, SLINK or ALINK.

    `source_slot`/`target_slot` keep the attribute names the endpoints were
    given in, since the slot decides which identifier class is legal.
    """
    kind: LinkKind
    lid: Optional[str] = None
    rel_type: Optional[str] = Field(None, alias='relType')
    source: Optional[str] = None
    source_slot: Optional[str] = None
    target: Optional[str] = None
    target_slot: Optional[str] = None
    signal_id: Optional[str] = Field(None, alias='signalID')
    origin: Optional[str] = None
    syntax: Optional[str] = None
    comment: Optional[str] = None

    def attributes(self) -> dict[str, str]:
        data = {
            'lid': self.lid, 'relType': self.rel_type, 'signalID': self.signal_id,
            'origin': self.origin, 'syntax': self.syntax, 'comment': self.comment,
        }
        if self.source_slot:
            data[self.source_slot] = self.source
        if self.target_slot:
            data[self.target_slot] = self.target
        return {**{k: v for k, v in data.items() if v is not None}, **self.extra}

    def endpoints(self) -> list[tuple[str, Optional[str]]]:
        return [(self.source_slot, self.source), (self.target_slot, self.target)]


class DctBlock(TimeMLModel):
    content: list[Segment] = []
    extra: dict[str, str] = {}


class TextRegion(TimeMLModel):
    content: list[Segment] = []
    extra: dict[str, str] = {}


class UnknownNode(TimeMLModel):
    """An element outside the TimeML vocabulary in a position where it is not allowed."""
    name: str
    context: str
    key: str


LIST_FIELDS = {
    'DCT': 'dcts', 'TEXT': 'texts', 'EVENT': 'events', 'TIMEX3': 'timexes', 'SIGNAL': 'signals',
    'MAKEINSTANCE': 'makeinstances', 'TLINK': 'tlinks', 'SLINK': 'slinks', 'ALINK': 'alinks',
}


class Document(TimeMLModel):
    """A TimeML document.

    The root element body is `content`, a sequence of raw text, verbatim markup
    and references into the typed lists below. TEXT and DCT bodies are
    sequences of the same kind. Every position lives in `source_map`, keyed
    `TAG:index` (elements), `TAG:index@attribute` (attributes) or
    `UNKNOWN:index` (unknown elements).
    """
    doctype: Optional[str] = config.DOCTYPE
    root_name: str = 'TimeML'
    root_attributes: dict[str, str] = {}
    content: list[Segment] = []
    dcts: list[DctBlock] = []
    texts: list[TextRegion] = []
    events: list[Event] = []
    timexes: list[Timex3] = []
    signals: list[Signal] = []
    makeinstances: list[EventInstance] = []
    tlinks: list[Link] = []
    slinks: list[Link] = []
    alinks: list[Link] = []
    unknown_nodes: list[UnknownNode] = []
    source_map: dict[str, SourcePosition] = {}

    @property
    def dct(self) -> Optional[DctBlock]:
        return self.dcts[0] if self.dcts else None

    @property
    def text_region(self) -> Optional[TextRegion]:
        return self.texts[0] if self.texts else None

    @property
    def links(self) -> list[Link]:
        return [*self.tlinks, *self.slinks, *self.alinks]

    @property
    def preamble(self) -> str:
        """Verbatim root content outside TEXT (metadata, whitespace, markup)."""
        parts = []
        for segment in self.content:
            if isinstance(segment, RawSegment):
                parts.append(segment.raw if segment.raw is not None else segment.text)
            elif isinstance(segment, MarkupSegment):
                parts.append(segment.markup)
        return ''.join(parts)

    @property
    def instances(self) -> list[EventInstance]:
        """Every event instance, inline and MAKEINSTANCE, in document order."""
        found = []
        for ref in self.iter_refs():
            if ref.tag == 'EVENT':
                instance = self.events[ref.index].instance()
                if instance is not None:
                    found.append(instance)
            elif ref.tag == 'MAKEINSTANCE':
                found.append(self.makeinstances[ref.index])
        return found

    def entities(self, tag: str) -> list[Any]:
        return getattr(self, LIST_FIELDS[tag])

    def lookup(self, ref: EntityRef) -> Any:
        """Return the model a handle points at."""
        item = self.entities(ref.tag)[ref.index]
        if ref.inline:
            return item.instance()
        return item

    def position(self, key: str, attribute: Optional[str] = None) -> SourcePosition:
        """Position of an element, or of one of its attributes when known."""
        if attribute is not None and f'{key}@{attribute}' in self.source_map:
            return self.source_map[f'{key}@{attribute}']
        return self.source_map.get(key, SYNTHETIC)

    def iter_refs(self, content: Optional[list] = None) -> Iterator[EntityRef]:
        """Yield every element handle in document order, descending into DCT and TEXT."""
        for segment in self.content if content is None else content:
            if not isinstance(segment, EntityRef):
                continue
            yield segment
            if segment.tag == 'DCT':
                yield from self.iter_refs(self.dcts[segment.index].content)
            elif segment.tag == 'TEXT':
                yield from self.iter_refs(self.texts[segment.index].content)

    def region_of(self, target: EntityRef) -> str:
        """Return 'TEXT', 'DCT' or 'ROOT' for the region an element sits in."""
        def search(content, region):
            for segment in content:
                if not isinstance(segment, EntityRef):
                    continue
                if segment.tag == target.tag and segment.index == target.index:
                    return region
                if segment.tag in ('DCT', 'TEXT'):
                    body = self.dcts if segment.tag == 'DCT' else self.texts
                    inner = 'TEXT' if region == 'TEXT' else segment.tag
                    found = search(body[segment.index].content, inner)
                    if found:
                        return found
            return None
        return search(self.content, 'ROOT') or 'ROOT'

    def dct_timexes(self, block: DctBlock) -> list[Timex3]:
        return [self.timexes[s.index] for s in block.content if isinstance(s, EntityRef) and s.tag == 'TIMEX3']

    def text_content(self, region: Optional[TextRegion] = None) -> str:
        """Decoded character content of a TEXT region (annotation extents inlined)."""
        region = region or self.text_region
        if region is None:
            return ''
        parts = []
        for segment in region.content:
            if isinstance(segment, RawSegment):
                parts.append(segment.text)
            elif isinstance(segment, EntityRef):
                if segment.tag == 'DCT':
                    parts.extend(t.surface_text for t in self.dct_timexes(self.dcts[segment.index]))
                elif segment.tag == 'TEXT':
                    parts.append(self.text_content(self.texts[segment.index]))
                else:
                    item = self.entities(segment.tag)[segment.index]
                    parts.append(getattr(item, 'surface_text', ''))
        return ''.join(parts)

    def structure(self) -> dict:
        """Plain-data view used for structural equality: no positions, no source spellings."""
        return _strip(self.model_dump(exclude={'source_map'}))


def _strip(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip(v) for k, v in value.items() if k != 'raw'}
    if isinstance(value, list):
        return [_strip(v) for v in value]
    return value


class IdIndex(TimeMLModel):
    """Identifier index of a document.

    Attributes:
        bindings: identifier -> handle of its first binding
        duplicates: identifiers bound more than once
        occurrences: identifier -> every handle binding it, in document order
    """
    bindings: dict[str, EntityRef] = {}
    duplicates: list[str] = []
    occurrences: dict[str, list[EntityRef]] = {}

