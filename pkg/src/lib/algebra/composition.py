"""Allen composition table, derived from endpoint orderings.

Every assignment of ranks 0..5 to the six endpoints of three intervals A, B
and C covers all weak orderings of those points. Classifying A-B, B-C and
A-C for every proper assignment and OR-ing the A-C relation into
table[A-B][B-C] yields the transitivity table without typing a single entry.
"""
from functools import lru_cache

import numpy as np

from src.models.relation import ALLEN_RELATIONS, ENDPOINT_CONSTRAINTS, FULL_MASK

SIGN_DIGIT = {'<': 0, '=': 1, '>': 2}

# sign pattern code (base 3 over the four endpoint comparisons) -> relation index, -1 for none
PATTERN_LOOKUP = np.full(81, -1, dtype=np.int64)
for _index, _relation in enumerate(ALLEN_RELATIONS):
    _code = 0
    for _sign in ENDPOINT_CONSTRAINTS[_relation].pattern():
        _code = _code * 3 + SIGN_DIGIT[_sign]
    PATTERN_LOOKUP[_code] = _index


def classify(a_start, a_end, b_start, b_end) -> np.ndarray:
    """Relation index of A to B for arrays of endpoints; -1 where an interval is improper."""
    digits = [
        np.sign(np.subtract(a_start, b_start)) + 1,
        np.sign(np.subtract(a_start, b_end)) + 1,
        np.sign(np.subtract(a_end, b_start)) + 1,
        np.sign(np.subtract(a_end, b_end)) + 1,
    ]
    codes = ((digits[0] * 3 + digits[1]) * 3 + digits[2]) * 3 + digits[3]
    found = PATTERN_LOOKUP[codes.astype(np.int64)]
    proper = (np.asarray(a_start) < np.asarray(a_end)) & (np.asarray(b_start) < np.asarray(b_end))
    return np.where(proper, found, -1)


@lru_cache(maxsize=1)
def composition_table() -> tuple[tuple[int, ...], ...]:
    """table[i][j]: bitmask of the relations A-C can take when A-B is relation i and B-C relation j."""
    ranks = np.indices((6,) * 6).reshape(6, -1).T
    a_start, a_end, b_start, b_end, c_start, c_end = ranks.T
    proper = (a_start < a_end) & (b_start < b_end) & (c_start < c_end)
    ranks = ranks[proper]
    a_start, a_end, b_start, b_end, c_start, c_end = ranks.T

    ab = classify(a_start, a_end, b_start, b_end)
    bc = classify(b_start, b_end, c_start, c_end)
    ac = classify(a_start, a_end, c_start, c_end)

    table = np.zeros((len(ALLEN_RELATIONS), len(ALLEN_RELATIONS)), dtype=np.int64)
    np.bitwise_or.at(table, (ab, bc), np.left_shift(1, ac))
    return tuple(tuple(int(cell) for cell in row) for row in table)


@lru_cache(maxsize=1)
def inverse_indexes() -> tuple[int, ...]:
    """Relation index of B to A for each relation index of A to B."""
    # swapping A and B exchanges the roles of the endpoint pairs
    inverses = []
    for relation in ALLEN_RELATIONS:
        a_start, a_end, b_start, b_end = _witness(relation)
        inverses.append(int(classify(b_start, b_end, a_start, a_end)))
    return tuple(inverses)


def _witness(relation) -> tuple[int, int, int, int]:
    """Smallest integer endpoints realizing a relation."""
    ranks = np.indices((4,) * 4).reshape(4, -1).T
    found = classify(ranks[:, 0], ranks[:, 1], ranks[:, 2], ranks[:, 3])
    row = ranks[np.argmax(found == ALLEN_RELATIONS.index(relation))]
    return tuple(int(v) for v in row)


def bits_of(mask: int) -> list[int]:
    return [i for i in range(len(ALLEN_RELATIONS)) if mask >> i & 1]


@lru_cache(maxsize=65536)
def compose_masks(left: int, right: int) -> int:
    if not left or not right:
        return 0
    if left == FULL_MASK or right == FULL_MASK:
        return FULL_MASK
    table = composition_table()
    result = 0
    for i in bits_of(left):
        row = table[i]
        for j in bits_of(right):
            result |= row[j]
            if result == FULL_MASK:
                return result
    return result


@lru_cache(maxsize=8192)
def inverse_mask(mask: int) -> int:
    inverses = inverse_indexes()
    result = 0
    for i in bits_of(mask):
        result |= 1 << inverses[i]
    return result
