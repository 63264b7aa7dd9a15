from enum import StrEnum
from typing import Iterable, Iterator, Literal

from src.models.entity import TimeMLModel


class AllenRelation(StrEnum):
    """The 13 basic interval relations. Member order fixes the bit of each relation."""
    BEFORE = 'before'
    AFTER = 'after'
    MEETS = 'meets'
    MET_BY = 'met_by'
    OVERLAPS = 'overlaps'
    OVERLAPPED_BY = 'overlapped_by'
    STARTS = 'starts'
    STARTED_BY = 'started_by'
    FINISHES = 'finishes'
    FINISHED_BY = 'finished_by'
    DURING = 'during'
    CONTAINS = 'contains'
    EQUALS = 'equals'

    @property
    def bit(self) -> int:
        return 1 << ALLEN_RELATIONS.index(self)


ALLEN_RELATIONS: tuple[AllenRelation, ...] = tuple(AllenRelation)
FULL_MASK = (1 << len(ALLEN_RELATIONS)) - 1


class RelationSet(TimeMLModel):
    """A disjunction of basic relations, stored as a 13-bit mask.

    The empty set means inconsistency; the full set means no information.
    """
    bits: int = 0

    @classmethod
    def of(cls, relations: Iterable[AllenRelation]) -> 'RelationSet':
        bits = 0
        for relation in relations:
            bits |= AllenRelation(relation).bit
        return cls(bits=bits)

    @classmethod
    def full(cls) -> 'RelationSet':
        return cls(bits=FULL_MASK)

    def __iter__(self) -> Iterator[AllenRelation]:
        return (r for i, r in enumerate(ALLEN_RELATIONS) if self.bits >> i & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, relation: AllenRelation) -> bool:
        return bool(self.bits & AllenRelation(relation).bit)

    def __and__(self, other: 'RelationSet') -> 'RelationSet':
        return RelationSet(bits=self.bits & other.bits)

    def __or__(self, other: 'RelationSet') -> 'RelationSet':
        return RelationSet(bits=self.bits | other.bits)

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def relations(self) -> set[AllenRelation]:
        return set(self)

    def __repr__(self) -> str:
        return '{' + ', '.join(r.value for r in self) + '}'


Comparison = Literal['<', '=', '>']


class EndpointConstraint(TimeMLModel):
    """Sign pattern of an Allen relation between A=(a-, a+) and B=(b-, b+).

    Each field compares one endpoint of A with one endpoint of B;
    a- < a+ and b- < b+ are implicit.
    """
    start_start: Comparison
    start_end: Comparison
    end_start: Comparison
    end_end: Comparison

    def pattern(self) -> tuple[str, str, str, str]:
        return (self.start_start, self.start_end, self.end_start, self.end_end)


def _constraint(pattern: str) -> EndpointConstraint:
    ss, se, es, ee = pattern
    return EndpointConstraint(start_start=ss, start_end=se, end_start=es, end_end=ee)


ENDPOINT_CONSTRAINTS: dict[AllenRelation, EndpointConstraint] = {
    AllenRelation.BEFORE: _constraint('<<<<'),
    AllenRelation.AFTER: _constraint('>>>>'),
    AllenRelation.MEETS: _constraint('<<=<'),
    AllenRelation.MET_BY: _constraint('>=>>'),
    AllenRelation.OVERLAPS: _constraint('<<><'),
    AllenRelation.OVERLAPPED_BY: _constraint('><>>'),
    AllenRelation.STARTS: _constraint('=<><'),
    AllenRelation.STARTED_BY: _constraint('=<>>'),
    AllenRelation.FINISHES: _constraint('><>='),
    AllenRelation.FINISHED_BY: _constraint('<<>='),
    AllenRelation.DURING: _constraint('><><'),
    AllenRelation.CONTAINS: _constraint('<<>>'),
    AllenRelation.EQUALS: _constraint('=<>='),
}
