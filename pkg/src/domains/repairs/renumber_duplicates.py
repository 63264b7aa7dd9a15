from src.domains.documents.collect_ids import collect_ids
from src.domains.documents.references import element_refs, iter_references, present
from src.domains.repairs.free_ids import IdAllocator
from src.lib.utils.logger import get_logger
from src.models.document import Document, EntityRef
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig
from src.models.timeml import id_kind

logger = get_logger(__name__)

OWN_FIELDS = {'EVENT': 'eid', 'TIMEX3': 'tid', 'SIGNAL': 'sid', 'MAKEINSTANCE': 'eiid', 'TLINK': 'lid', 'SLINK': 'lid', 'ALINK': 'lid'}


def own_field(handle: EntityRef) -> str:
    if handle.tag == 'EVENT' and handle.inline:
        return 'inline_instance.eiid'
    return OWN_FIELDS[handle.tag]


def renumber_duplicates(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """RENUMBER_DUPLICATE every later binding of a duplicated identifier.

    The first binding keeps the identifier. A reference is moved to a later
    binding (RETARGET_REFERENCE) when it sits after that binding and before the
    next one, in the same region; every other reference keeps the first binding.
    """
    index = collect_ids(doc)
    allocator = IdAllocator.of(index)
    order = {ref.key: position for position, ref in enumerate(element_refs(doc))}
    references = list(present(iter_references(doc)))
    actions = []

    for identifier in index.duplicates:
        kind = id_kind(identifier)
        occurrences = index.occurrences[identifier]
        replacements = [identifier]
        for handle in occurrences[1:]:
            new = allocator.smallest(kind)
            replacements.append(new)
            actions.append(RepairAction(
                kind=RepairActionKind.RENUMBER_DUPLICATE,
                before=identifier,
                after=new,
                position=doc.position(handle.key, 'eiid' if handle.inline else own_field(handle)),
                rationale=f'{identifier} is already bound by an earlier {occurrences[0].tag}',
                edits=[Edit(op='set', key=handle.key, field=own_field(handle), value=new)],
            ))

        regions = [doc.region_of(handle) for handle in occurrences]
        starts = [order[handle.key] for handle in occurrences]
        for ref in references:
            if ref.value != identifier or ref.kind != kind:
                continue
            at = order[ref.key]
            preceding = [k for k, start in enumerate(starts) if start < at]
            if not preceding or preceding[-1] == 0:
                continue
            k = preceding[-1]
            if regions[k] != doc.region_of(ref.ref):
                continue
            actions.append(RepairAction(
                kind=RepairActionKind.RETARGET_REFERENCE,
                before=identifier,
                after=replacements[k],
                position=doc.position(ref.key, ref.attribute),
                rationale=f'{ref.attribute} follows the renumbered {occurrences[k].tag} in the same region',
                edits=[Edit(op='set', key=ref.key, field=ref.field, value=replacements[k])],
            ))

    if actions:
        logger.debug(f'renumbered {len(index.duplicates)} duplicated identifiers')
    return actions
