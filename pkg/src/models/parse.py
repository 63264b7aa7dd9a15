from enum import StrEnum

from src.models.document import SourcePosition
from src.models.entity import TimeMLModel


class ParseMode(StrEnum):
    STRICT = 'STRICT'
    LENIENT = 'LENIENT'


class ParseErrorCategory(StrEnum):
    NOT_WELL_FORMED = 'NOT_WELL_FORMED'
    BAD_ENCODING = 'BAD_ENCODING'
    UNKNOWN_ELEMENT = 'UNKNOWN_ELEMENT'
    UNKNOWN_ATTRIBUTE = 'UNKNOWN_ATTRIBUTE'
    MISSING_REQUIRED_ATTRIBUTE = 'MISSING_REQUIRED_ATTRIBUTE'
    BAD_ATTRIBUTE_VALUE = 'BAD_ATTRIBUTE_VALUE'


FATAL_CATEGORIES = frozenset({ParseErrorCategory.NOT_WELL_FORMED, ParseErrorCategory.BAD_ENCODING})


class ParseError(TimeMLModel):
    category: ParseErrorCategory
    message: str
    position: SourcePosition

    @property
    def fatal(self) -> bool:
        return self.category in FATAL_CATEGORIES
