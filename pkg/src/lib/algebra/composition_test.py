import numpy as np

from src.lib.algebra.composition import (
    bits_of, classify, compose_masks, composition_table, inverse_indexes, inverse_mask,
)
from src.models.relation import ALLEN_RELATIONS, AllenRelation, FULL_MASK
from tests.fixture_spec import TestFixture

B = AllenRelation


def mask(*relations: AllenRelation) -> int:
    result = 0
    for relation in relations:
        result |= relation.bit
    return result


class TestComposition(TestFixture):
    def test_classify_vectorized(self):
        found = classify(np.array([0, 0, 1]), np.array([1, 2, 2]), np.array([2, 0, 0]), np.array([3, 2, 3]))

        assert [ALLEN_RELATIONS[i] for i in found] == [B.BEFORE, B.EQUALS, B.DURING]


    def test_classify_improper_interval(self):
        assert int(classify(1, 1, 0, 2)) == -1


    def test_table_shape_and_identity(self):
        table = composition_table()
        equals = ALLEN_RELATIONS.index(B.EQUALS)

        assert len(table) == 13
        assert all(len(row) == 13 for row in table)
        for i, relation in enumerate(ALLEN_RELATIONS):
            assert table[equals][i] == relation.bit
            assert table[i][equals] == relation.bit


    def test_known_entries(self):
        assert compose_masks(B.BEFORE.bit, B.BEFORE.bit) == B.BEFORE.bit
        assert compose_masks(B.MEETS.bit, B.MEETS.bit) == B.BEFORE.bit
        assert compose_masks(B.DURING.bit, B.DURING.bit) == B.DURING.bit
        assert compose_masks(B.BEFORE.bit, B.AFTER.bit) == FULL_MASK
        assert compose_masks(B.OVERLAPS.bit, B.OVERLAPS.bit) == mask(B.BEFORE, B.MEETS, B.OVERLAPS)
        assert compose_masks(B.STARTS.bit, B.CONTAINS.bit) == mask(
            B.BEFORE, B.MEETS, B.OVERLAPS, B.CONTAINS, B.FINISHED_BY,
        )


    def test_compose_masks_distributes_over_union(self):
        left = mask(B.BEFORE, B.MEETS)
        right = mask(B.DURING)

        assert compose_masks(left, right) == compose_masks(B.BEFORE.bit, right) | compose_masks(B.MEETS.bit, right)
        assert compose_masks(0, right) == 0
        assert compose_masks(FULL_MASK, right) == FULL_MASK


    def test_inverse_indexes_success(self):
        pairs = {ALLEN_RELATIONS[i]: ALLEN_RELATIONS[j] for i, j in enumerate(inverse_indexes())}

        assert pairs[B.BEFORE] == B.AFTER
        assert pairs[B.MEETS] == B.MET_BY
        assert pairs[B.OVERLAPS] == B.OVERLAPPED_BY
        assert pairs[B.STARTS] == B.STARTED_BY
        assert pairs[B.FINISHES] == B.FINISHED_BY
        assert pairs[B.DURING] == B.CONTAINS
        assert pairs[B.EQUALS] == B.EQUALS
        assert all(pairs[pairs[r]] == r for r in ALLEN_RELATIONS)


    def test_inverse_mask_success(self):
        assert inverse_mask(mask(B.BEFORE, B.DURING)) == mask(B.AFTER, B.CONTAINS)
        assert inverse_mask(FULL_MASK) == FULL_MASK


    def test_bits_of_success(self):
        assert bits_of(0b101) == [0, 2]
        assert bits_of(0) == []
