"""TimeML 1.2 vocabulary: element names, enumerations, identifier grammars and
the attribute table shared by the parser, serializer and validator."""
import re
from enum import StrEnum
from typing import Optional


class EventClass(StrEnum):
    OCCURRENCE = 'OCCURRENCE'
    PERCEPTION = 'PERCEPTION'
    REPORTING = 'REPORTING'
    ASPECTUAL = 'ASPECTUAL'
    STATE = 'STATE'
    I_STATE = 'I_STATE'
    I_ACTION = 'I_ACTION'


class TimexType(StrEnum):
    DATE = 'DATE'
    TIME = 'TIME'
    DURATION = 'DURATION'
    SET = 'SET'


class FunctionInDocument(StrEnum):
    CREATION_TIME = 'CREATION_TIME'
    PUBLICATION_TIME = 'PUBLICATION_TIME'
    RELEASE_TIME = 'RELEASE_TIME'
    RECEPTION_TIME = 'RECEPTION_TIME'
    EXPIRATION_TIME = 'EXPIRATION_TIME'
    MODIFICATION_TIME = 'MODIFICATION_TIME'
    NONE = 'NONE'


class LinkKind(StrEnum):
    TLINK = 'TLINK'
    SLINK = 'SLINK'
    ALINK = 'ALINK'


class TimeMLRelType(StrEnum):
    """Every relType value of the three link kinds."""
    BEFORE = 'BEFORE'
    AFTER = 'AFTER'
    INCLUDES = 'INCLUDES'
    IS_INCLUDED = 'IS_INCLUDED'
    DURING = 'DURING'
    DURING_INV = 'DURING_INV'
    SIMULTANEOUS = 'SIMULTANEOUS'
    IDENTITY = 'IDENTITY'
    BEGINS = 'BEGINS'
    BEGUN_BY = 'BEGUN_BY'
    ENDS = 'ENDS'
    ENDED_BY = 'ENDED_BY'
    IBEFORE = 'IBEFORE'
    IAFTER = 'IAFTER'
    MODAL = 'MODAL'
    EVIDENTIAL = 'EVIDENTIAL'
    NEG_EVIDENTIAL = 'NEG_EVIDENTIAL'
    FACTIVE = 'FACTIVE'
    COUNTER_FACTIVE = 'COUNTER_FACTIVE'
    CONDITIONAL = 'CONDITIONAL'
    INITIATES = 'INITIATES'
    CULMINATES = 'CULMINATES'
    TERMINATES = 'TERMINATES'
    CONTINUES = 'CONTINUES'
    REINITIATES = 'REINITIATES'


REL_TYPES: dict[LinkKind, frozenset[str]] = {
    LinkKind.TLINK: frozenset({
        'BEFORE', 'AFTER', 'INCLUDES', 'IS_INCLUDED', 'DURING', 'DURING_INV',
        'SIMULTANEOUS', 'IDENTITY', 'BEGINS', 'BEGUN_BY', 'ENDS', 'ENDED_BY',
        'IBEFORE', 'IAFTER',
    }),
    LinkKind.SLINK: frozenset({
        'MODAL', 'EVIDENTIAL', 'NEG_EVIDENTIAL', 'FACTIVE', 'COUNTER_FACTIVE', 'CONDITIONAL',
    }),
    LinkKind.ALINK: frozenset({
        'INITIATES', 'CULMINATES', 'TERMINATES', 'CONTINUES', 'REINITIATES',
    }),
}


class IdKind(StrEnum):
    """Identifier classes, valued by their prefix."""
    EVENT = 'e'
    INSTANCE = 'ei'
    TIMEX = 't'
    SIGNAL = 's'
    LINK = 'l'


ID_GRAMMARS: dict[IdKind, re.Pattern] = {
    IdKind.EVENT: re.compile(r'e[1-9][0-9]*'),
    IdKind.INSTANCE: re.compile(r'ei[1-9][0-9]*'),
    IdKind.TIMEX: re.compile(r't(?:0|[1-9][0-9]*)'),
    IdKind.SIGNAL: re.compile(r's[1-9][0-9]*'),
    IdKind.LINK: re.compile(r'l[1-9][0-9]*'),
}


def id_kind(value: Optional[str]) -> Optional[IdKind]:
    """Return the identifier class `value` is a well-formed member of, if any."""
    if not value:
        return None
    for kind, grammar in ID_GRAMMARS.items():
        if grammar.fullmatch(value):
            return kind
    return None


def is_identifier(value: Optional[str], kind: IdKind) -> bool:
    return bool(value) and ID_GRAMMARS[kind].fullmatch(value) is not None


def id_number(value: str) -> int:
    return int(value[len(id_kind(value)):])


# Which element and attribute own an identifier of each class
ID_OWNERS: dict[IdKind, tuple[str, str]] = {
    IdKind.EVENT: ('EVENT', 'eid'),
    IdKind.TIMEX: ('TIMEX3', 'tid'),
    IdKind.SIGNAL: ('SIGNAL', 'sid'),
}

ANNOTATION_ELEMENTS = frozenset({'EVENT', 'TIMEX3', 'SIGNAL'})
LINK_ELEMENTS = frozenset({'TLINK', 'SLINK', 'ALINK'})
TIMEML_ELEMENTS = frozenset({'TimeML', 'DCT', 'TEXT', 'MAKEINSTANCE'}) | ANNOTATION_ELEMENTS | LINK_ELEMENTS

INSTANCE_ATTRIBUTES = ('eiid', 'tense', 'aspect', 'polarity', 'pos', 'modality', 'vForm', 'pred', 'cardinality')

EVENT_ATTRIBUTES = ('eid', 'class', 'stem', 'comment') + INSTANCE_ATTRIBUTES
TIMEX3_ATTRIBUTES = (
    'tid', 'type', 'value', 'mod', 'quant', 'freq', 'temporalFunction', 'functionInDocument',
    'anchorTimeID', 'beginPoint', 'endPoint', 'valueFromFunction', 'comment',
)
SIGNAL_ATTRIBUTES = ('sid', 'comment')
MAKEINSTANCE_ATTRIBUTES = ('eiid', 'eventID', 'signalID', 'comment') + INSTANCE_ATTRIBUTES[1:]

# Endpoint slots: attribute name -> identifier class it must hold
SOURCE_SLOTS: dict[LinkKind, dict[str, IdKind]] = {
    LinkKind.TLINK: {'eventInstanceID': IdKind.INSTANCE, 'timeID': IdKind.TIMEX},
    LinkKind.SLINK: {'eventInstanceID': IdKind.INSTANCE},
    LinkKind.ALINK: {'eventInstanceID': IdKind.INSTANCE},
}
TARGET_SLOTS: dict[LinkKind, dict[str, IdKind]] = {
    LinkKind.TLINK: {'relatedToEventInstance': IdKind.INSTANCE, 'relatedToTime': IdKind.TIMEX},
    LinkKind.SLINK: {'subordinatedEventInstance': IdKind.INSTANCE},
    LinkKind.ALINK: {'relatedToEventInstance': IdKind.INSTANCE},
}
LINK_ATTRIBUTES = ('lid', 'relType', 'signalID', 'origin', 'syntax', 'comment')

# Typed reference attributes outside link endpoints
TIMEX_REFERENCE_SLOTS = ('anchorTimeID', 'beginPoint', 'endPoint')

REQUIRED_ATTRIBUTES: dict[str, tuple[str, ...]] = {
    'EVENT': ('eid', 'class'),
    'TIMEX3': ('tid', 'type', 'value'),
    'SIGNAL': ('sid',),
    'MAKEINSTANCE': ('eiid', 'eventID'),
    'TLINK': ('lid', 'relType'),
    'SLINK': ('lid', 'relType'),
    'ALINK': ('lid', 'relType'),
}

UNKNOWN_DCT_VALUE = 'XXXX-XX-XX'
BOOLEAN_VALUES = frozenset({'true', 'false'})


def allowed_attributes(tag: str) -> frozenset[str]:
    if tag == 'EVENT':
        return frozenset(EVENT_ATTRIBUTES)
    if tag == 'TIMEX3':
        return frozenset(TIMEX3_ATTRIBUTES)
    if tag == 'SIGNAL':
        return frozenset(SIGNAL_ATTRIBUTES)
    if tag == 'MAKEINSTANCE':
        return frozenset(MAKEINSTANCE_ATTRIBUTES)
    if tag in LINK_ELEMENTS:
        kind = LinkKind(tag)
        return frozenset(LINK_ATTRIBUTES) | frozenset(SOURCE_SLOTS[kind]) | frozenset(TARGET_SLOTS[kind])
    return frozenset()


# Enumerated attributes checked for E010, per element
ENUMERATIONS: dict[tuple[str, str], frozenset[str]] = {
    ('EVENT', 'class'): frozenset(EventClass),
    ('TIMEX3', 'type'): frozenset(TimexType),
    ('TIMEX3', 'functionInDocument'): frozenset(FunctionInDocument),
    ('TIMEX3', 'temporalFunction'): BOOLEAN_VALUES,
}
