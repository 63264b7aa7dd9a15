from src.lib.algebra.composition import compose_masks
from src.models.relation import RelationSet


def compose(first: RelationSet, second: RelationSet) -> RelationSet:
    """Relations A-C may take when A-B is in `first` and B-C in `second`."""
    return RelationSet(bits=compose_masks(first.bits, second.bits))
