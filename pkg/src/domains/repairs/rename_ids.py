from src.domains.documents.collect_ids import collect_ids
from src.domains.documents.references import iter_bindings, iter_references, present
from src.domains.repairs.free_ids import IdAllocator, normalized
from src.lib.utils.logger import get_logger
from src.models.document import Document
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig
from src.models.timeml import id_kind

logger = get_logger(__name__)


def rename_ids(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """RENAME_ID for missing or malformed identifiers.

    An element's own identifier keeps its digits under the right prefix when
    that is free. References spelling the old value in a slot of the same class
    follow the rename. A malformed reference whose digits name a bound
    identifier of its slot's class is rewritten on its own.
    """
    allocator = IdAllocator.of(collect_ids(doc))
    references = list(present(iter_references(doc)))
    renamed: dict[tuple, str] = {}
    actions = []

    for slot in iter_bindings(doc):
        if slot.value and id_kind(slot.value) == slot.kind:
            continue
        new = allocator.preferred(slot.kind, slot.value)
        edits = [Edit(op='set', key=slot.key, field=slot.field, value=new)]
        # references follow the first element spelling the old value
        if slot.value and (slot.kind, slot.value) not in renamed:
            renamed[(slot.kind, slot.value)] = new
            edits.extend(
                Edit(op='set', key=ref.key, field=ref.field, value=new)
                for ref in references
                if ref.kind == slot.kind and ref.value == slot.value
            )
        actions.append(RepairAction(
            kind=RepairActionKind.RENAME_ID,
            before=slot.value or '',
            after=new,
            position=doc.position(slot.key, slot.attribute),
            rationale=f'{slot.ref.tag} {slot.attribute} must match {slot.kind.value}<number>' if slot.value
            else f'{slot.ref.tag} has no {slot.attribute}',
            edits=edits,
        ))

    bound = allocator.taken
    for ref in references:
        if ref.kind is None or id_kind(ref.value) is not None or (ref.kind, ref.value) in renamed:
            continue
        target = normalized(ref.kind, ref.value)
        if target is None or target not in bound:
            continue
        actions.append(RepairAction(
            kind=RepairActionKind.RENAME_ID,
            before=ref.value,
            after=target,
            position=doc.position(ref.key, ref.attribute),
            rationale=f'{ref.attribute} on {ref.ref.tag} spells {target} without its prefix',
            edits=[Edit(op='set', key=ref.key, field=ref.field, value=target)],
        ))

    if actions:
        logger.debug(f'renamed {len(actions)} identifiers')
    return actions
