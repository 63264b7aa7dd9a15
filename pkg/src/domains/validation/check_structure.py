from src.domains.validation.check_schema import dct_timex_indexes
from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import DOCUMENT_START, Document
from src.models.timeml import ANNOTATION_ELEMENTS


def check_text(doc: Document) -> list[Diagnostic]:
    """E009 unless the document has exactly one TEXT."""
    if not doc.texts:
        return [diagnostic('E009', 'document has no TEXT', DOCUMENT_START)]
    return [
        diagnostic('E009', f'document has {len(doc.texts)} TEXT elements', doc.position(f'TEXT:{index}'))
        for index in range(1, len(doc.texts))
    ]


def check_instances(doc: Document) -> list[Diagnostic]:
    """E011 for a MAKEINSTANCE whose event is instantiated exactly once."""
    counts: dict[str, int] = {}
    for instance in doc.instances:
        if instance.event_id:
            counts[instance.event_id] = counts.get(instance.event_id, 0) + 1
    eids = {event.eid for event in doc.events if event.eid}

    found = []
    for index, instance in enumerate(doc.makeinstances):
        if instance.event_id in eids and counts.get(instance.event_id) == 1:
            found.append(diagnostic(
                'E011', f'MAKEINSTANCE {instance.eiid or ""} is the only instance of {instance.event_id}',
                doc.position(f'MAKEINSTANCE:{index}'), [instance.eiid, instance.event_id],
            ))
    return found


def check_placement(doc: Document) -> list[Diagnostic]:
    """W103 for annotations outside TEXT (the DCT timex excepted)."""
    in_dct = dct_timex_indexes(doc)
    found = []
    for ref in doc.iter_refs():
        if ref.tag not in ANNOTATION_ELEMENTS or doc.region_of(ref) == 'TEXT':
            continue
        if ref.tag == 'TIMEX3' and ref.index in in_dct:
            continue
        item = doc.entities(ref.tag)[ref.index]
        own = getattr(item, 'eid', None) or getattr(item, 'tid', None) or getattr(item, 'sid', None)
        found.append(diagnostic('W103', f'{ref.tag} outside TEXT', doc.position(ref.key), [own]))
    return found


def check_doctype(doc: Document) -> list[Diagnostic]:
    if doc.doctype:
        return []
    return [diagnostic('W104', 'document has no DOCTYPE declaration', DOCUMENT_START)]


def check_extents(doc: Document) -> list[Diagnostic]:
    """I201 for EVENT and TIMEX3 extents longer than one word."""
    found = []
    for ref in doc.iter_refs():
        if ref.tag not in ('EVENT', 'TIMEX3'):
            continue
        item = doc.entities(ref.tag)[ref.index]
        words = item.surface_text.split()
        if len(words) > 1:
            own = getattr(item, 'eid', None) or getattr(item, 'tid', None)
            found.append(diagnostic('I201', f'{ref.tag} extent "{item.surface_text}" has {len(words)} words', doc.position(ref.key), [own]))
    return found
