from src.domains.documents.references import element_refs, iter_bindings, iter_references, present
from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import Document, EntityRef
from src.models.timeml import ENUMERATIONS, LinkKind, REL_TYPES, REQUIRED_ATTRIBUTES, id_kind


def dct_timex_indexes(doc: Document) -> set[int]:
    return {
        segment.index
        for block in doc.dcts
        for segment in block.content
        if isinstance(segment, EntityRef) and segment.tag == 'TIMEX3'
    }


def check_unknown(doc: Document) -> list[Diagnostic]:
    """E002 for unknown elements and unknown attributes."""
    found = []
    for node in doc.unknown_nodes:
        where = 'in the document' if node.context == 'DOCUMENT' else f'inside {node.context}'
        found.append(diagnostic('E002', f'unknown element <{node.name}> {where}', doc.position(node.key)))
    for ref in element_refs(doc):
        item = doc.entities(ref.tag)[ref.index]
        for name in item.extra:
            found.append(diagnostic(
                'E002', f'unknown attribute {name} on {ref.tag}',
                doc.position(ref.key, name), attribute=name,
            ))
    for index, block in enumerate(doc.dcts):
        for name in block.extra:
            found.append(diagnostic('E002', f'unknown attribute {name} on DCT', doc.position(f'DCT:{index}', name), attribute=name))
    for index, region in enumerate(doc.texts):
        for name in region.extra:
            found.append(diagnostic('E002', f'unknown attribute {name} on TEXT', doc.position(f'TEXT:{index}', name), attribute=name))
    return found


def check_required(doc: Document) -> list[Diagnostic]:
    """E003: required attributes, link endpoints and the eiid of inline instances."""
    found = []
    in_dct = dct_timex_indexes(doc)
    for ref in element_refs(doc):
        item = doc.entities(ref.tag)[ref.index]
        attributes = item.attributes()
        for name in REQUIRED_ATTRIBUTES[ref.tag]:
            if name in attributes:
                continue
            if ref.tag == 'TIMEX3' and name == 'type' and ref.index in in_dct and item.is_unknown_form:
                continue
            found.append(diagnostic('E003', f'{ref.tag} without {name}', doc.position(ref.key), [_own_id(item)], attribute=name))
        if ref.tag in ('TLINK', 'SLINK', 'ALINK'):
            for side, value in (('source', item.source_slot), ('target', item.target_slot)):
                if value is None:
                    found.append(diagnostic('E003', f'{ref.tag} without a {side} endpoint', doc.position(ref.key), [item.lid]))
        if ref.tag == 'EVENT' and item.inline_instance is not None and item.inline_instance.eiid is None:
            found.append(diagnostic(
                'E003', 'EVENT carries instance attributes without eiid',
                doc.position(ref.key), [item.eid], attribute='eiid',
            ))
    return found


def check_identifiers(doc: Document) -> list[Diagnostic]:
    """E004: own identifiers and reference values outside every identifier grammar."""
    found = []
    for slot in present(iter_bindings(doc)):
        if id_kind(slot.value) != slot.kind:
            found.append(diagnostic(
                'E004', f'malformed identifier {slot.attribute}="{slot.value}" on {slot.ref.tag}',
                doc.position(slot.key, slot.attribute), [slot.value], attribute=slot.attribute,
            ))
    for slot in present(iter_references(doc)):
        if id_kind(slot.value) is None:
            found.append(diagnostic(
                'E004', f'malformed reference {slot.attribute}="{slot.value}" on {slot.ref.tag}',
                doc.position(slot.key, slot.attribute), [slot.value], attribute=slot.attribute,
            ))
    return found


def check_enumerations(doc: Document) -> list[Diagnostic]:
    """E010: enumerated attribute values, relType checked against the link kind."""
    found = []
    for ref in element_refs(doc):
        item = doc.entities(ref.tag)[ref.index]
        attributes = item.attributes()
        if ref.tag in ('TLINK', 'SLINK', 'ALINK'):
            allowed = {'relType': REL_TYPES[LinkKind(ref.tag)]}
        else:
            allowed = {attr: values for (tag, attr), values in ENUMERATIONS.items() if tag == ref.tag}
        for name, values in allowed.items():
            value = attributes.get(name)
            if value is not None and value not in values:
                found.append(diagnostic(
                    'E010', f'illegal {name}="{value}" on {ref.tag}',
                    doc.position(ref.key, name), [_own_id(item)], attribute=name,
                ))
    return found


def check_schema(doc: Document) -> list[Diagnostic]:
    """Element-level rules: E002, E003, E004 and E010."""
    return [*check_unknown(doc), *check_required(doc), *check_identifiers(doc), *check_enumerations(doc)]


def _own_id(item) -> str:
    for name in ('eid', 'tid', 'sid', 'eiid', 'lid'):
        value = getattr(item, name, None)
        if value:
            return value
    return ''
