from src.domains.documents.collect_ids import collect_ids
from src.models.document import Document
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig
from src.models.timeml import IdKind, id_kind


def fold_instances(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """FOLD_MAKEINSTANCE: move the attributes of an event's only instance onto the EVENT.

    A MAKEINSTANCE carrying a signalID, a comment or unknown attributes stays,
    since the EVENT has nowhere to hold them.
    """
    if not cfg.fold_single_instances:
        return []
    index = collect_ids(doc)
    counts: dict[str, int] = {}
    for instance in doc.instances:
        if instance.event_id:
            counts[instance.event_id] = counts.get(instance.event_id, 0) + 1

    actions = []
    for position in reversed(range(len(doc.makeinstances))):
        instance = doc.makeinstances[position]
        handle = index.bindings.get(instance.event_id or '')
        if id_kind(instance.event_id) != IdKind.EVENT or handle is None or handle.tag != 'EVENT':
            continue
        if counts.get(instance.event_id) != 1 or instance.signal_id or instance.comment or instance.extra or not instance.eiid:
            continue
        key = f'MAKEINSTANCE:{position}'
        attributes = instance.instance_attrs()
        actions.append(RepairAction(
            kind=RepairActionKind.FOLD_MAKEINSTANCE,
            before=f'MAKEINSTANCE {instance.eiid}',
            after=f'EVENT {instance.event_id} {instance.eiid}',
            position=doc.position(key),
            rationale=f'{instance.event_id} is instantiated once, so the instance belongs on the EVENT',
            edits=[
                Edit(op='set', key=handle.key, field='inline_instance', value=attributes.model_dump()),
                Edit(op='remove', key=key),
            ],
        ))
    return actions
