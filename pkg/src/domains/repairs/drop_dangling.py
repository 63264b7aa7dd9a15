from typing import Optional

from src.domains.documents.collect_ids import collect_ids
from src.domains.documents.references import iter_references
from src.models.document import Document, IdIndex
from src.models.repair import DanglingPolicy, Edit, RepairAction, RepairActionKind, RepairConfig

# optional references removed on their own instead of dropping their element
DETACHABLE = {
    ('TIMEX3', 'anchorTimeID'), ('TIMEX3', 'beginPoint'), ('TIMEX3', 'endPoint'), ('MAKEINSTANCE', 'signalID'),
}


def dangling(index: IdIndex, value: Optional[str]) -> bool:
    """A reference that is missing or names nothing. A bound value of the wrong class is not dangling."""
    return not value or value not in index.bindings


def drop_dangling_instances(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """Remove MAKEINSTANCEs whose eventID names no event."""
    if cfg.dangling_policy != DanglingPolicy.DROP:
        return []
    index = collect_ids(doc)
    actions = []
    for position in reversed(range(len(doc.makeinstances))):
        instance = doc.makeinstances[position]
        if not dangling(index, instance.event_id):
            continue
        key = f'MAKEINSTANCE:{position}'
        actions.append(RepairAction(
            kind=RepairActionKind.DROP_DANGLING_LINK,
            before=f'MAKEINSTANCE {instance.eiid or ""}'.strip(),
            after='',
            position=doc.position(key),
            rationale=f'eventID "{instance.event_id or ""}" names no event',
            edits=[Edit(op='remove', key=key)],
        ))
    return actions


def drop_dangling_links(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """Remove links with a missing or dangling endpoint or signalID.

    Removals run from the last link of each kind backwards, so every key stays
    valid while the actions are replayed in order.
    """
    if cfg.dangling_policy != DanglingPolicy.DROP:
        return []
    index = collect_ids(doc)
    actions = []
    for tag, links in (('TLINK', doc.tlinks), ('SLINK', doc.slinks), ('ALINK', doc.alinks)):
        for position in reversed(range(len(links))):
            link = links[position]
            reasons = [
                f'{slot or side} "{value}" names no element' if value else f'no {side} endpoint'
                for side, slot, value in (('source', link.source_slot, link.source), ('target', link.target_slot, link.target))
                if dangling(index, value)
            ]
            if link.signal_id and dangling(index, link.signal_id):
                reasons.append(f'signalID "{link.signal_id}" names no signal')
            if not reasons:
                continue
            key = f'{tag}:{position}'
            actions.append(RepairAction(
                kind=RepairActionKind.DROP_DANGLING_LINK,
                before=f'{tag} {link.lid or ""}'.strip(),
                after='',
                position=doc.position(key),
                rationale='; '.join(reasons),
                edits=[Edit(op='remove', key=key)],
            ))
    return actions


def drop_dangling_attributes(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """Remove dangling anchorTimeID, beginPoint and endPoint on TIMEX3 and signalID on MAKEINSTANCE."""
    if cfg.dangling_policy != DanglingPolicy.DROP:
        return []
    index = collect_ids(doc)
    actions = []
    for slot in iter_references(doc):
        if slot.value is None or (slot.ref.tag, slot.attribute) not in DETACHABLE:
            continue
        if not dangling(index, slot.value):
            continue
        actions.append(RepairAction(
            kind=RepairActionKind.DROP_DANGLING_LINK,
            before=f'{slot.attribute}="{slot.value}"',
            after='',
            position=doc.position(slot.key, slot.attribute),
            rationale=f'{slot.attribute} on {slot.ref.tag} names no element',
            edits=[Edit(op='set', key=slot.key, field=slot.field, value=None)],
        ))
    return actions
