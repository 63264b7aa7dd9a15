from src.lib.algebra.composition import inverse_indexes, inverse_mask
from src.models.relation import ALLEN_RELATIONS, AllenRelation, RelationSet


def inverse(relation: AllenRelation) -> AllenRelation:
    """B's relation to A given A's relation to B."""
    return ALLEN_RELATIONS[inverse_indexes()[ALLEN_RELATIONS.index(AllenRelation(relation))]]


def inverse_set(relations: RelationSet) -> RelationSet:
    return RelationSet(bits=inverse_mask(relations.bits))
