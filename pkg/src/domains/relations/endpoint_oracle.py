from functools import lru_cache
from itertools import product

from src.domains.relations.relate import relate
from src.models.relation import AllenRelation, RelationSet


@lru_cache(maxsize=1)
def _orderings() -> tuple[tuple[int, ...], ...]:
    """Every weak ordering of the six endpoints a-, a+, b-, b+, c-, c+ as dense ranks."""
    found = set()
    for ranks in product(range(6), repeat=6):
        used = sorted(set(ranks))
        dense = tuple(used.index(r) for r in ranks)
        if dense[0] < dense[1] and dense[2] < dense[3] and dense[4] < dense[5]:
            found.add(dense)
    return tuple(sorted(found))


@lru_cache(maxsize=1)
def _relation_triples() -> tuple[tuple[AllenRelation, AllenRelation, AllenRelation], ...]:
    triples = set()
    for a_start, a_end, b_start, b_end, c_start, c_end in _orderings():
        a, b, c = (a_start, a_end), (b_start, b_end), (c_start, c_end)
        triples.add((relate(a, b), relate(b, c), relate(a, c)))
    return tuple(triples)


def endpoint_oracle(first: AllenRelation, second: AllenRelation) -> RelationSet:
    """Brute-force composition: the relations A-C takes over all orderings where A first B and B second C."""
    first, second = AllenRelation(first), AllenRelation(second)
    return RelationSet.of(ac for ab, bc, ac in _relation_triples() if ab == first and bc == second)
