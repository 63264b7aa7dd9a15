from src.models.document import Document, EntityRef, IdIndex


def bound_ids(doc: Document, ref: EntityRef) -> list[tuple[str, str]]:
    """Identifiers an element binds, as (attribute, value) pairs."""
    item = doc.entities(ref.tag)[ref.index]
    if ref.tag == 'EVENT':
        pairs = [('eid', item.eid)]
        if item.inline_instance is not None:
            pairs.append(('eiid', item.inline_instance.eiid))
        return pairs
    if ref.tag == 'TIMEX3':
        return [('tid', item.tid)]
    if ref.tag == 'SIGNAL':
        return [('sid', item.sid)]
    if ref.tag == 'MAKEINSTANCE':
        return [('eiid', item.eiid)]
    if ref.tag in ('TLINK', 'SLINK', 'ALINK'):
        return [('lid', item.lid)]
    return []


def collect_ids(doc: Document) -> IdIndex:
    """Index every identifier binding in document order.

    An identifier bound twice keeps its first binding; later ones are
    listed under `occurrences` and the identifier under `duplicates`.
    """
    occurrences: dict[str, list[EntityRef]] = {}
    for ref in doc.iter_refs():
        for attribute, value in bound_ids(doc, ref):
            if not value:
                continue
            handle = EntityRef(tag=ref.tag, index=ref.index, inline=attribute == 'eiid' and ref.tag == 'EVENT')
            occurrences.setdefault(value, []).append(handle)

    return IdIndex(
        bindings={value: handles[0] for value, handles in occurrences.items()},
        duplicates=[value for value, handles in occurrences.items() if len(handles) > 1],
        occurrences=occurrences,
    )
