"""Qualitative constraint network over intervals with path consistency."""
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from src.lib.algebra.composition import compose_masks, inverse_mask
from src.models.relation import AllenRelation, FULL_MASK

EQUALS = AllenRelation.EQUALS.bit


class Constraint(NamedTuple):
    """`source` relates to `target` by one of the relations in `mask`."""
    label: str
    source: str
    target: str
    mask: int


@dataclass
class Conflict:
    """An edge emptied by the network, with the constraint labels that emptied it."""
    source: str
    target: str
    support: frozenset[str]


@dataclass
class ConstraintNetwork:
    edges: dict[tuple[str, str], int] = field(default_factory=dict)
    support: dict[tuple[str, str], frozenset[str]] = field(default_factory=dict)
    neighbours: dict[str, set[str]] = field(default_factory=dict)

    def get(self, a: str, b: str) -> int:
        if a == b:
            return EQUALS
        if (a, b) in self.edges:
            return self.edges[(a, b)]
        if (b, a) in self.edges:
            return inverse_mask(self.edges[(b, a)])
        return FULL_MASK

    def supported_by(self, a: str, b: str) -> frozenset[str]:
        return self.support.get((a, b)) or self.support.get((b, a)) or frozenset()

    def narrow(self, a: str, b: str, mask: int, support: frozenset[str]) -> bool:
        """Intersect edge a-b with mask; True when the edge changed."""
        current = self.get(a, b)
        narrowed = current & mask
        if narrowed == current:
            return False
        key = (b, a) if (b, a) in self.edges else (a, b)
        self.edges[key] = narrowed if key == (a, b) else inverse_mask(narrowed)
        self.support[key] = self.supported_by(a, b) | support
        self.neighbours.setdefault(a, set()).add(b)
        self.neighbours.setdefault(b, set()).add(a)
        return True

    def add(self, constraint: Constraint) -> Optional[Conflict]:
        """Conjoin a constraint; returns a conflict when it leaves no relation."""
        label = frozenset({constraint.label})
        if constraint.source == constraint.target:
            if constraint.mask & EQUALS:
                return None
            return Conflict(constraint.source, constraint.target, label)
        self.narrow(constraint.source, constraint.target, constraint.mask, label)
        if not self.get(constraint.source, constraint.target):
            return Conflict(constraint.source, constraint.target, self.supported_by(constraint.source, constraint.target))
        return None

    def propagate(self) -> Optional[Conflict]:
        """Path consistency: narrow every edge by two-step compositions until fixpoint.

        Edges only ever shrink, so the loop terminates. Stops at the first emptied edge.
        """
        queue = deque(sorted(self.edges))
        while queue:
            i, j = queue.popleft()
            for k in sorted(self.neighbours.get(i, set()) | self.neighbours.get(j, set())):
                if k in (i, j):
                    continue
                ij = self.get(i, j)
                updates = (
                    (i, k, compose_masks(ij, self.get(j, k)), self.supported_by(i, j) | self.supported_by(j, k)),
                    (k, j, compose_masks(self.get(k, i), ij), self.supported_by(k, i) | self.supported_by(i, j)),
                )
                for a, b, mask, support in updates:
                    if self.narrow(a, b, mask, support):
                        if not self.get(a, b):
                            return Conflict(a, b, self.supported_by(a, b))
                        queue.append((a, b))
        return None


def components(constraints: Iterable[Constraint]) -> list[list[Constraint]]:
    """Split constraints into groups sharing no interval, in first-appearance order."""
    parent: dict[str, str] = {}

    def find(node: str) -> str:
        parent.setdefault(node, node)
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    constraints = list(constraints)
    for constraint in constraints:
        parent[find(constraint.source)] = find(constraint.target)

    groups: dict[str, list[Constraint]] = {}
    for constraint in constraints:
        groups.setdefault(find(constraint.source), []).append(constraint)
    return list(groups.values())


def first_conflict(constraints: Iterable[Constraint]) -> Optional[Conflict]:
    network = ConstraintNetwork()
    for constraint in constraints:
        conflict = network.add(constraint)
        if conflict:
            return conflict
    return network.propagate()


def minimize(constraints: list[Constraint], support: frozenset[str]) -> list[Constraint]:
    """Deletion filtering: drop every constraint the conflict survives without."""
    witness = [c for c in constraints if c.label in support]
    for candidate in list(witness):
        trial = [c for c in witness if c is not candidate]
        if trial and first_conflict(trial):
            witness = trial
    return witness
