from typing import Any, Optional

from src.models.document import Document, EntityRef, IdIndex
from src.models.timeml import IdKind, id_kind


def resolve(doc: Document, index: IdIndex, identifier: Optional[str], kind: Optional[IdKind] = None) -> Optional[Any]:
    """Return the model an identifier is bound to, or None.

    With `kind`, the identifier must also be a well-formed member of that class.
    """
    if not identifier:
        return None
    if kind is not None and id_kind(identifier) != kind:
        return None
    handle: Optional[EntityRef] = index.bindings.get(identifier)
    if handle is None:
        return None
    return doc.lookup(handle)


def is_bound(index: IdIndex, identifier: Optional[str]) -> bool:
    return bool(identifier) and identifier in index.bindings
