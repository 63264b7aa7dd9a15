from src.lib.xml.text import decode_text, escape_attribute, escape_text
from src.models.document import Document, EntityRef, MarkupSegment, RawSegment, Segment

XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'


def start_tag(name: str, attributes: dict[str, str], empty: bool = False) -> str:
    """Start tag with attributes in alphabetical order; `<X a="b" />` when empty."""
    rendered = ''.join(f' {key}="{escape_attribute(value)}"' for key, value in sorted(attributes.items()))
    if empty:
        return f'<{name}{rendered} />'
    return f'<{name}{rendered}>'


def render_text(text: str, raw: str | None) -> str:
    """Source spelling of character data: the original one while it still holds."""
    if raw is not None and decode_text(raw) == text:
        return raw
    return escape_text(text)


def render_segment(doc: Document, segment: Segment) -> str:
    if isinstance(segment, RawSegment):
        return render_text(segment.text, segment.raw)
    if isinstance(segment, MarkupSegment):
        return segment.markup
    return render_element(doc, segment)


def render_content(doc: Document, content: list[Segment]) -> str:
    return ''.join(render_segment(doc, segment) for segment in content)


def render_element(doc: Document, ref: EntityRef) -> str:
    item = doc.entities(ref.tag)[ref.index]
    if ref.tag in ('DCT', 'TEXT'):
        return start_tag(ref.tag, item.extra) + render_content(doc, item.content) + f'</{ref.tag}>'
    attributes = item.attributes()
    extent = getattr(item, 'surface_text', '')
    raw = getattr(item, 'raw', None)
    if not extent and not raw:
        return start_tag(ref.tag, attributes, empty=True)
    return start_tag(ref.tag, attributes) + render_text(extent, raw) + f'</{ref.tag}>'


def serialize(doc: Document) -> bytes:
    """Write a Document as UTF-8 XML with a declaration and, when set, the DOCTYPE line."""
    parts = [XML_DECLARATION, '\n']
    if doc.doctype:
        parts.extend([doc.doctype, '\n'])
    parts.append(start_tag(doc.root_name, doc.root_attributes))
    parts.append(render_content(doc, doc.content))
    parts.append(f'</{doc.root_name}>\n')
    return ''.join(parts).encode('utf-8')
