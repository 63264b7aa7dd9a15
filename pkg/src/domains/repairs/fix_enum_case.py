from typing import Optional

from src.domains.documents.references import element_refs
from src.models.document import Document
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig
from src.models.timeml import BOOLEAN_VALUES, ENUMERATIONS, LINK_ELEMENTS, LinkKind, REL_TYPES

# attribute -> model field, per element
ENUM_FIELDS = {
    'EVENT': {'class': 'event_class'},
    'TIMEX3': {'type': 'timex_type', 'functionInDocument': 'function_in_document', 'temporalFunction': 'temporal_function'},
    **{tag: {'relType': 'rel_type'} for tag in LINK_ELEMENTS},
}


def legal_values(tag: str, attribute: str) -> frozenset[str]:
    if attribute == 'relType':
        return REL_TYPES[LinkKind(tag)]
    return ENUMERATIONS[(tag, attribute)]


def recased(value: str, legal: frozenset[str]) -> Optional[str]:
    """The legal spelling of a value that differs from it only by case."""
    candidate = value.lower() if legal == BOOLEAN_VALUES else value.upper()
    return candidate if candidate in legal else None


def fix_enum_case(doc: Document, cfg: RepairConfig) -> list[RepairAction]:
    """FIX_ENUM_CASE for enumerated values that are legal once upcased (lowercased for booleans).

    Any other illegal value is left alone and stays an E010.
    """
    actions = []
    for ref in element_refs(doc):
        item = doc.entities(ref.tag)[ref.index]
        for attribute, field in ENUM_FIELDS.get(ref.tag, {}).items():
            value = getattr(item, field)
            legal = legal_values(ref.tag, attribute)
            if value is None or value in legal:
                continue
            fixed = recased(value, legal)
            if fixed is None:
                continue
            actions.append(RepairAction(
                kind=RepairActionKind.FIX_ENUM_CASE,
                before=value,
                after=fixed,
                position=doc.position(ref.key, attribute),
                rationale=f'{attribute} on {ref.tag} is case-sensitive',
                edits=[Edit(op='set', key=ref.key, field=field, value=fixed)],
            ))
    return actions
