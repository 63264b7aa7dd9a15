from src.domains.documents.collect_ids import bound_ids
from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import Document, IdIndex


def check_duplicates(doc: Document, index: IdIndex) -> list[Diagnostic]:
    """E005 for every binding of an identifier after its first."""
    found = []
    for value in index.duplicates:
        first = index.occurrences[value][0]
        for handle in index.occurrences[value][1:]:
            attribute = next((a for a, v in bound_ids(doc, handle) if v == value), None)
            found.append(diagnostic(
                'E005', f'identifier {value} already bound by {first.tag}',
                doc.position(handle.key, attribute), [value], attribute=attribute,
            ))
    return found
