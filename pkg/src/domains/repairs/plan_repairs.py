from typing import Callable, Optional

from src.domains.repairs.add_dct import add_dct
from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.drop_dangling import drop_dangling_attributes, drop_dangling_instances, drop_dangling_links
from src.domains.repairs.fix_enum_case import fix_enum_case
from src.domains.repairs.fold_instances import fold_instances
from src.domains.repairs.rename_ids import rename_ids
from src.domains.repairs.renumber_duplicates import renumber_duplicates
from src.domains.repairs.synthesize_instances import synthesize_instances
from src.domains.repairs.wrap_text import wrap_text
from src.domains.validation.validate_document import validate
from src.lib.utils import config
from src.lib.utils.errors import IrreparableError
from src.lib.utils.logger import get_logger
from src.models.diagnostic import error_codes
from src.models.document import DOCUMENT_START, Document
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig

logger = get_logger(__name__)

Phase = Callable[[Document, RepairConfig], list[RepairAction]]


def add_doctype(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    if doc.doctype:
        return []
    return [RepairAction(
        kind=RepairActionKind.ADD_DOCTYPE,
        before='',
        after=config.DOCTYPE,
        position=DOCUMENT_START,
        rationale='strict documents declare the TimeML DOCTYPE',
        edits=[Edit(op='set', key='DOCUMENT', field='doctype', value=config.DOCTYPE)],
    )]


# Each phase sees the document as left by the phases before it
PHASES: tuple[Phase, ...] = (
    rename_ids,
    renumber_duplicates,
    fix_enum_case,
    synthesize_instances,
    drop_dangling_instances,
    drop_dangling_links,
    drop_dangling_attributes,
    fold_instances,
    wrap_text,
    add_dct,
    add_doctype,
)


def run_phases(doc: Document, cfg: RepairConfig) -> tuple[Document, list[RepairAction]]:
    current, actions = doc, []
    for phase in PHASES:
        found = phase(current, cfg)
        if found:
            logger.info(f'{phase.__name__}: {len(found)} actions')
            current = apply_actions(current, found)
            actions.extend(found)
    return current, actions


def plan(doc: Document, cfg: Optional[RepairConfig] = None) -> list[RepairAction]:
    """The ordered repair actions for a LENIENT-parsed document, without changing it.

    Raises IrreparableError, carrying the actions found, when strict-validity
    errors would remain after every phase.
    """
    cfg = cfg or RepairConfig()
    repaired, actions = run_phases(doc, cfg)
    codes = error_codes(validate(repaired))
    if codes:
        logger.info(f'irreparable: {", ".join(codes)} after {len(actions)} actions')
        raise IrreparableError(codes, actions, repaired)
    return actions
