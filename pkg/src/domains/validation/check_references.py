from src.domains.documents.references import iter_references, present
from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import Document, IdIndex
from src.models.timeml import id_kind


def check_references(doc: Document, index: IdIndex) -> list[Diagnostic]:
    """E006 for references naming no element, E012 for identifiers of the wrong class.

    A value outside every identifier grammar is E004 and is skipped here.
    A slot holding the wrong class gets E012 only.
    """
    found = []
    for slot in present(iter_references(doc)):
        kind = id_kind(slot.value)
        if kind is None:
            continue
        source_id = _owner_id(doc, slot)
        position = doc.position(slot.key, slot.attribute)
        if kind != slot.kind:
            expected = slot.kind.value if slot.kind else 'no'
            found.append(diagnostic(
                'E012', f'{slot.attribute}="{slot.value}" on {slot.ref.tag} must hold a "{expected}" identifier',
                position, [source_id, slot.value], attribute=slot.attribute,
            ))
        elif slot.value not in index.bindings:
            found.append(diagnostic(
                'E006', f'{slot.attribute}="{slot.value}" on {slot.ref.tag} names no element',
                position, [source_id, slot.value], attribute=slot.attribute,
            ))
    return found


def _owner_id(doc: Document, slot) -> str:
    item = doc.entities(slot.ref.tag)[slot.ref.index]
    for name in ('lid', 'eiid', 'tid'):
        value = getattr(item, name, None)
        if value:
            return value
    return ''
