from enum import StrEnum
from typing import Any, Literal

from pydantic import BaseModel, Field

from src.lib.utils import config
from src.models.document import SYNTHETIC, SourcePosition
from src.models.entity import TimeMLModel


class RepairActionKind(StrEnum):
    ADD_DCT = 'ADD_DCT'
    WRAP_TEXT = 'WRAP_TEXT'
    RENAME_ID = 'RENAME_ID'
    RENUMBER_DUPLICATE = 'RENUMBER_DUPLICATE'
    DROP_DANGLING_LINK = 'DROP_DANGLING_LINK'
    RETARGET_REFERENCE = 'RETARGET_REFERENCE'
    FOLD_MAKEINSTANCE = 'FOLD_MAKEINSTANCE'
    SYNTHESIZE_INSTANCE = 'SYNTHESIZE_INSTANCE'
    FIX_ENUM_CASE = 'FIX_ENUM_CASE'
    ESCAPE_CHARS = 'ESCAPE_CHARS'
    ADD_DOCTYPE = 'ADD_DOCTYPE'


class Edit(TimeMLModel):
    """One primitive change to a document, the unit of action replay.

    ops:
        set: assign `value` to `field` (a dotted path) of the element at `key`;
             None removes an optional attribute, key DOCUMENT targets the root model
        remove: delete the element at `key` and its handle
        append: add the element data `value` to the list of tag `key`
        insert: put the segments `value` right before the handle `key`
        wrap: move root content between the cuts value["start"] and value["end"],
              each [segment index, character offset], into a new TEXT element
    """
    op: Literal['set', 'remove', 'append', 'insert', 'wrap']
    key: str = ''
    field: str = ''
    value: Any = None


class RepairAction(TimeMLModel):
    """A logged repair.

    Attributes:
        kind: Action kind
        before: Offending spelling before the repair
        after: Spelling after the repair
        position: Where the repaired node sits in the original input
        rationale: Why the repair was made
        edits: Primitive changes replaying the action
    """
    kind: RepairActionKind
    before: str = ''
    after: str = ''
    position: SourcePosition = SYNTHETIC
    rationale: str = ''
    edits: list[Edit] = Field([], exclude=True)

    def to_json(self) -> dict:
        return {
            'kind': str(self.kind),
            'before': self.before,
            'after': self.after,
            'line': self.position.line,
            'column': self.position.column,
            'rationale': self.rationale,
        }


class DanglingPolicy(StrEnum):
    DROP = 'DROP'
    KEEP_AND_FAIL = 'KEEP_AND_FAIL'


class DctHeuristic(StrEnum):
    FUNCTION_ATTRIBUTE_FIRST = 'FUNCTION_ATTRIBUTE_FIRST'


class RepairConfig(BaseModel):
    dangling_policy: DanglingPolicy = DanglingPolicy(config.DANGLING_POLICY)
    dct_heuristic: DctHeuristic = DctHeuristic.FUNCTION_ATTRIBUTE_FIRST
    fold_single_instances: bool = config.FOLD_SINGLE_INSTANCES


class Span(TimeMLModel):
    """Character span [start, end) over the root content of a document, character data decoded."""
    start: int
    end: int
