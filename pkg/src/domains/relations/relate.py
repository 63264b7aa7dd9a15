from numbers import Real

from src.models.relation import AllenRelation, ENDPOINT_CONSTRAINTS

_BY_PATTERN = {constraint.pattern(): relation for relation, constraint in ENDPOINT_CONSTRAINTS.items()}


def _compare(x: Real, y: Real) -> str:
    if x < y:
        return '<'
    if x > y:
        return '>'
    return '='


def relate(a: tuple[Real, Real], b: tuple[Real, Real]) -> AllenRelation:
    """Allen relation between two concrete intervals (start, end)."""
    (a_start, a_end), (b_start, b_end) = a, b
    if not (a_start < a_end and b_start < b_end):
        raise ValueError(f'improper interval in {a}, {b}')
    pattern = (
        _compare(a_start, b_start), _compare(a_start, b_end),
        _compare(a_end, b_start), _compare(a_end, b_end),
    )
    return _BY_PATTERN[pattern]
