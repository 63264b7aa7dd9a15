from src.domains.validation.validate_document import validate
from src.models.diagnostic import has_errors
from src.models.document import Document


def is_strict(doc: Document) -> bool:
    return not has_errors(validate(doc))
