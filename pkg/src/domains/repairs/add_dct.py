from typing import Optional

from src.domains.documents.collect_ids import collect_ids
from src.domains.repairs.free_ids import IdAllocator
from src.lib.utils.logger import get_logger
from src.models.document import DOCUMENT_START, Document, EntityRef, RawSegment, Timex3
from src.models.repair import DctHeuristic, Edit, RepairAction, RepairActionKind, RepairConfig
from src.models.timeml import FunctionInDocument, IdKind, UNKNOWN_DCT_VALUE

logger = get_logger(__name__)


def creation_timex(doc: Document, cfg: RepairConfig) -> tuple[Optional[int], str]:
    """Index of the timex to copy into a new DCT, with the reason it was chosen.

    Only a unique CREATION_TIME timex, or failing that a unique
    PUBLICATION_TIME one, qualifies. None means the unknown form is used.
    """
    if cfg.dct_heuristic == DctHeuristic.FUNCTION_ATTRIBUTE_FIRST:
        for function in (FunctionInDocument.CREATION_TIME, FunctionInDocument.PUBLICATION_TIME):
            found = [i for i, timex in enumerate(doc.timexes) if timex.function_in_document == function]
            if len(found) == 1:
                return found[0], f'copied from the only {function} timex'
    return None, 'no unique creation or publication time; the date is unknown'


def add_dct(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """ADD_DCT right before TEXT when the document has none.

    A chosen timex is copied, not moved, so TEXT stays intact. The copy gets
    tid t0 when free and functionInDocument CREATION_TIME.
    """
    if doc.dcts:
        return []
    allocator = IdAllocator.of(collect_ids(doc))
    tid = allocator.take('t0') if allocator.is_free('t0') else allocator.smallest(IdKind.TIMEX)
    source, rationale = creation_timex(doc, cfg)

    if source is None:
        timex = Timex3(tid=tid, value=UNKNOWN_DCT_VALUE)
        position = DOCUMENT_START
    else:
        timex = doc.timexes[source].model_copy(update={
            'tid': tid,
            'function_in_document': FunctionInDocument.CREATION_TIME.value,
            'anchor_time_id': None,
            'begin_point': None,
            'end_point': None,
        })
        position = doc.position(f'TIMEX3:{source}')

    handle = EntityRef(tag='TIMEX3', index=len(doc.timexes))
    dct = EntityRef(tag='DCT', index=0)
    anchor = 'TEXT:0' if doc.texts else ''
    logger.debug(f'adding DCT with {tid} ({rationale})')
    return [RepairAction(
        kind=RepairActionKind.ADD_DCT,
        before='' if source is None else doc.timexes[source].tid or '',
        after=f'{tid} {timex.value}',
        position=position,
        rationale=rationale,
        edits=[
            Edit(op='append', key='TIMEX3', value=timex.model_dump()),
            Edit(op='append', key='DCT', value={'content': [handle.model_dump()], 'extra': {}}),
            Edit(op='insert', key=anchor, value=[dct.model_dump(), RawSegment(text='\n', raw='\n').model_dump()]),
        ],
    )]
