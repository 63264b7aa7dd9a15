from enum import StrEnum
from typing import Optional

from pydantic import BaseModel, Field

from src.models.document import DOCUMENT_START, SourcePosition
from src.models.entity import TimeMLModel


class Severity(StrEnum):
    ERROR = 'ERROR'
    WARNING = 'WARNING'
    INFO = 'INFO'


class Rule(TimeMLModel):
    code: str
    severity: Severity
    summary: str


RULES: dict[str, Rule] = {rule.code: rule for rule in (
    Rule(code='E001', severity=Severity.ERROR, summary='not well-formed XML or bad encoding'),
    Rule(code='E002', severity=Severity.ERROR, summary='unknown element or attribute'),
    Rule(code='E003', severity=Severity.ERROR, summary='missing required attribute'),
    Rule(code='E004', severity=Severity.ERROR, summary='malformed identifier'),
    Rule(code='E005', severity=Severity.ERROR, summary='duplicate identifier'),
    Rule(code='E006', severity=Severity.ERROR, summary='dangling reference'),
    Rule(code='E007', severity=Severity.ERROR, summary='document must have exactly one DCT'),
    Rule(code='E008', severity=Severity.ERROR, summary='malformed DCT content'),
    Rule(code='E009', severity=Severity.ERROR, summary='document must have exactly one TEXT'),
    Rule(code='E010', severity=Severity.ERROR, summary='illegal enumeration value'),
    Rule(code='E011', severity=Severity.ERROR, summary='MAKEINSTANCE for a singly-instantiated event'),
    Rule(code='E012', severity=Severity.ERROR, summary='identifier of the wrong class for its slot'),
    Rule(code='W101', severity=Severity.WARNING, summary='possible temporal inconsistency'),
    Rule(code='W103', severity=Severity.WARNING, summary='annotation outside TEXT'),
    Rule(code='W104', severity=Severity.WARNING, summary='missing DOCTYPE'),
    Rule(code='I201', severity=Severity.INFO, summary='multi-word extent'),
)}

ERROR_CODES = frozenset(code for code, rule in RULES.items() if rule.severity == Severity.ERROR)


class Diagnostic(TimeMLModel):
    """A rule violation found in a document.

    Attributes:
        code: Rule code; the severity is looked up from RULES
        message: Human readable description
        position: Where the offending node starts in the input
        involved_ids: Identifiers involved, in the order they matter
        attribute: Offending attribute, when the violation is about one
    """
    code: str
    message: str
    position: SourcePosition = DOCUMENT_START
    involved_ids: list[str] = []
    attribute: Optional[str] = Field(None, exclude=True)

    @property
    def severity(self) -> Severity:
        return RULES[self.code].severity

    @property
    def sort_key(self) -> tuple:
        return (self.position.offset, self.position.line, self.position.column, self.code, self.message)

    def to_json(self) -> dict:
        return {
            'code': self.code,
            'severity': str(self.severity),
            'message': self.message,
            'line': self.position.line,
            'column': self.position.column,
            'ids': list(self.involved_ids),
        }


def diagnostic(code: str, message: str, position: SourcePosition = DOCUMENT_START,
               ids: Optional[list[str]] = None, attribute: Optional[str] = None) -> Diagnostic:
    return Diagnostic(code=code, message=message, position=position,
                      involved_ids=[i for i in (ids or []) if i], attribute=attribute)


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity == Severity.ERROR for d in diagnostics)


def error_codes(diagnostics: list[Diagnostic]) -> list[str]:
    return sorted({d.code for d in diagnostics if d.severity == Severity.ERROR})


class ValidationOptions(BaseModel):
    enable_consistency_lint: bool = False
    enable_extent_info: bool = False
