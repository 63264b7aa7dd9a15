"""Walks over identifier slots: the attributes binding an identifier and the
attributes referring to one."""
from typing import Iterator, NamedTuple, Optional

from src.models.document import Document, EntityRef
from src.models.timeml import IdKind, SOURCE_SLOTS, TARGET_SLOTS

TIMEX_REFERENCE_FIELDS = {'anchorTimeID': 'anchor_time_id', 'beginPoint': 'begin_point', 'endPoint': 'end_point'}


class Slot(NamedTuple):
    """One identifier-valued attribute occurrence.

    `field` is the dotted model path of the attribute, `kind` the identifier
    class the slot must hold (None when the slot has no legal class).
    """
    ref: EntityRef
    attribute: str
    field: str
    value: Optional[str]
    kind: Optional[IdKind]

    @property
    def key(self) -> str:
        return self.ref.key


def element_refs(doc: Document) -> Iterator[EntityRef]:
    """Handles of every annotation, instance and link, in document order."""
    for ref in doc.iter_refs():
        if ref.tag not in ('DCT', 'TEXT'):
            yield ref


def iter_bindings(doc: Document) -> Iterator[Slot]:
    for ref in element_refs(doc):
        item = doc.entities(ref.tag)[ref.index]
        if ref.tag == 'EVENT':
            yield Slot(ref, 'eid', 'eid', item.eid, IdKind.EVENT)
            if item.inline_instance is not None:
                yield Slot(ref, 'eiid', 'inline_instance.eiid', item.inline_instance.eiid, IdKind.INSTANCE)
        elif ref.tag == 'TIMEX3':
            yield Slot(ref, 'tid', 'tid', item.tid, IdKind.TIMEX)
        elif ref.tag == 'SIGNAL':
            yield Slot(ref, 'sid', 'sid', item.sid, IdKind.SIGNAL)
        elif ref.tag == 'MAKEINSTANCE':
            yield Slot(ref, 'eiid', 'eiid', item.eiid, IdKind.INSTANCE)
        else:
            yield Slot(ref, 'lid', 'lid', item.lid, IdKind.LINK)


def iter_references(doc: Document) -> Iterator[Slot]:
    """Every attribute holding a reference, present or not."""
    for ref in element_refs(doc):
        item = doc.entities(ref.tag)[ref.index]
        if ref.tag == 'TIMEX3':
            for attribute, field in TIMEX_REFERENCE_FIELDS.items():
                yield Slot(ref, attribute, field, getattr(item, field), IdKind.TIMEX)
        elif ref.tag == 'MAKEINSTANCE':
            yield Slot(ref, 'eventID', 'event_id', item.event_id, IdKind.EVENT)
            yield Slot(ref, 'signalID', 'signal_id', item.signal_id, IdKind.SIGNAL)
        elif ref.tag in ('TLINK', 'SLINK', 'ALINK'):
            if item.source_slot:
                yield Slot(ref, item.source_slot, 'source', item.source, SOURCE_SLOTS[item.kind].get(item.source_slot))
            if item.target_slot:
                yield Slot(ref, item.target_slot, 'target', item.target, TARGET_SLOTS[item.kind].get(item.target_slot))
            yield Slot(ref, 'signalID', 'signal_id', item.signal_id, IdKind.SIGNAL)


def present(slots: Iterator[Slot]) -> Iterator[Slot]:
    return (slot for slot in slots if slot.value is not None)
