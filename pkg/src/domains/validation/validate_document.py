from typing import Optional

from src.domains.documents.collect_ids import collect_ids
from src.domains.relations.consistency_lint import consistency_lint
from src.domains.validation.check_dct import check_dct
from src.domains.validation.check_duplicates import check_duplicates
from src.domains.validation.check_references import check_references
from src.domains.validation.check_schema import check_schema
from src.domains.validation.check_structure import (
    check_doctype, check_extents, check_instances, check_placement, check_text,
)
from src.lib.utils.logger import get_logger
from src.models.diagnostic import Diagnostic, Severity, ValidationOptions
from src.models.document import Document

logger = get_logger(__name__)


def validate(doc: Document, options: Optional[ValidationOptions] = None) -> list[Diagnostic]:
    """Run the whole rule catalog over a document.

    Every violation is reported; the document is TimeML-strict iff none has
    ERROR severity. Diagnostics come sorted by position, then code.
    """
    options = options or ValidationOptions()
    index = collect_ids(doc)

    diagnostics = [
        *check_schema(doc),
        *check_duplicates(doc, index),
        *check_references(doc, index),
        *check_dct(doc),
        *check_text(doc),
        *check_instances(doc),
        *check_placement(doc),
        *check_doctype(doc),
    ]
    if options.enable_consistency_lint:
        diagnostics.extend(consistency_lint(doc.tlinks, index, doc))
    if options.enable_extent_info:
        diagnostics.extend(check_extents(doc))

    diagnostics.sort(key=lambda d: d.sort_key)
    errors = sum(1 for d in diagnostics if d.severity == Severity.ERROR)
    logger.debug(f'validated: {len(diagnostics)} diagnostics, {errors} errors')
    return diagnostics
