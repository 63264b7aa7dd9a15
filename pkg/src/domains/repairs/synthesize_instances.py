from src.domains.documents.collect_ids import collect_ids
from src.domains.documents.references import iter_references, present
from src.domains.repairs.free_ids import IdAllocator
from src.models.document import Document
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig
from src.models.timeml import IdKind, id_kind


def synthesize_instances(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """SYNTHESIZE_INSTANCE for event ids given where an event instance id belongs.

    The reference moves to the event's only instance. An event with no instance
    gets an inline eiid first; an event with several is ambiguous and left as E012.
    """
    index = collect_ids(doc)
    allocator = IdAllocator.of(index)
    instances: dict[str, list[str]] = {}
    for instance in doc.instances:
        if instance.event_id and instance.eiid:
            instances.setdefault(instance.event_id, []).append(instance.eiid)

    created: dict[str, str] = {}
    actions = []
    for slot in present(iter_references(doc)):
        if slot.kind != IdKind.INSTANCE or id_kind(slot.value) != IdKind.EVENT:
            continue
        handle = index.bindings.get(slot.value)
        if handle is None or handle.inline:
            continue
        eid = slot.value
        edits = []
        if eid in created:
            eiid = created[eid]
        elif len(instances.get(eid, [])) == 1:
            eiid = instances[eid][0]
        elif eid not in instances:
            eiid = created[eid] = allocator.preferred(IdKind.INSTANCE, eid)
            edits.append(Edit(op='set', key=handle.key, field='inline_instance.eiid', value=eiid))
        else:
            continue
        edits.append(Edit(op='set', key=slot.key, field=slot.field, value=eiid))
        actions.append(RepairAction(
            kind=RepairActionKind.SYNTHESIZE_INSTANCE,
            before=eid,
            after=eiid,
            position=doc.position(slot.key, slot.attribute),
            rationale=f'{slot.attribute} names event {eid} instead of an instance of it'
            + ('; the event gets an inline instance' if edits[0].field == 'inline_instance.eiid' else ''),
            edits=edits,
        ))
    return actions
