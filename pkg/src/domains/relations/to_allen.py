from src.models.relation import AllenRelation
from src.models.timeml import TimeMLRelType

# DURING is overlapped-by: the first interval starts inside the second and outlasts it
TO_ALLEN: dict[TimeMLRelType, AllenRelation] = {
    TimeMLRelType.BEFORE: AllenRelation.BEFORE,
    TimeMLRelType.AFTER: AllenRelation.AFTER,
    TimeMLRelType.IBEFORE: AllenRelation.MEETS,
    TimeMLRelType.IAFTER: AllenRelation.MET_BY,
    TimeMLRelType.INCLUDES: AllenRelation.CONTAINS,
    TimeMLRelType.IS_INCLUDED: AllenRelation.DURING,
    TimeMLRelType.BEGINS: AllenRelation.STARTS,
    TimeMLRelType.BEGUN_BY: AllenRelation.STARTED_BY,
    TimeMLRelType.ENDS: AllenRelation.FINISHES,
    TimeMLRelType.ENDED_BY: AllenRelation.FINISHED_BY,
    TimeMLRelType.SIMULTANEOUS: AllenRelation.EQUALS,
    TimeMLRelType.IDENTITY: AllenRelation.EQUALS,
    TimeMLRelType.DURING: AllenRelation.OVERLAPPED_BY,
    TimeMLRelType.DURING_INV: AllenRelation.OVERLAPS,
}


def to_allen(rel_type: TimeMLRelType | str) -> AllenRelation:
    """Allen relation of a TLINK relType. Raises KeyError for SLINK/ALINK relTypes."""
    return TO_ALLEN[TimeMLRelType(rel_type)]
