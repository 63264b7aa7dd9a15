from src.domains.relations.to_allen import TO_ALLEN
from src.models.relation import AllenRelation
from src.models.timeml import TimeMLRelType

FROM_ALLEN: dict[AllenRelation, TimeMLRelType] = {
    allen: rel_type for rel_type, allen in TO_ALLEN.items() if rel_type != TimeMLRelType.IDENTITY
}


def from_allen(relation: AllenRelation, identity_hint: bool = False) -> TimeMLRelType:
    """TLINK relType for an Allen relation; equals becomes IDENTITY only with the hint."""
    if relation == AllenRelation.EQUALS and identity_hint:
        return TimeMLRelType.IDENTITY
    return FROM_ALLEN[AllenRelation(relation)]
