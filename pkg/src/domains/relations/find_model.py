from graphlib import CycleError, TopologicalSorter
from typing import Optional

from src.domains.relations.to_allen import to_allen
from src.models.document import Link
from src.models.relation import ENDPOINT_CONSTRAINTS


def find_model(tlinks: list[Link]) -> Optional[dict[str, tuple[int, int]]]:
    """Integer endpoints satisfying every TLINK at once, or None when there are none.

    Each relation is a conjunction of endpoint equalities and orderings, so a
    conjunction of TLINKs is a point-algebra problem: merge equal points, then
    any topological order of the merged points is a model.
    """
    parent: dict[str, str] = {}

    def find(point: str) -> str:
        parent.setdefault(point, point)
        while parent[point] != point:
            parent[point] = parent[parent[point]]
            point = parent[point]
        return point

    orderings: list[tuple[str, str]] = []
    intervals: list[str] = []
    for link in tlinks:
        for interval in (link.source, link.target):
            if interval not in intervals:
                intervals.append(interval)
        pattern = ENDPOINT_CONSTRAINTS[to_allen(link.rel_type)].pattern()
        pairs = (
            (f'{link.source}-', f'{link.target}-'), (f'{link.source}-', f'{link.target}+'),
            (f'{link.source}+', f'{link.target}-'), (f'{link.source}+', f'{link.target}+'),
        )
        for sign, (left, right) in zip(pattern, pairs):
            if sign == '=':
                parent[find(left)] = find(right)
            elif sign == '<':
                orderings.append((left, right))
            else:
                orderings.append((right, left))
    for interval in intervals:
        orderings.append((f'{interval}-', f'{interval}+'))

    graph: dict[str, set[str]] = {}
    for left, right in orderings:
        low, high = find(left), find(right)
        if low == high:
            return None
        graph.setdefault(high, set()).add(low)
        graph.setdefault(low, set())

    try:
        order = list(TopologicalSorter(graph).static_order())
    except CycleError:
        return None
    rank = {point: position for position, point in enumerate(order)}
    return {
        interval: (rank[find(f'{interval}-')], rank[find(f'{interval}+')])
        for interval in intervals
    }
