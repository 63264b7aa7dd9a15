from typing import Optional

from src.domains.relations.to_allen import to_allen
from src.lib.algebra.network import Constraint, components, first_conflict, minimize
from src.lib.utils.logger import get_logger
from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import SYNTHETIC, Document, IdIndex, Link
from src.models.timeml import LinkKind, REL_TYPES, SOURCE_SLOTS, TARGET_SLOTS, id_kind

logger = get_logger(__name__)

FUZZINESS_CAVEAT = 'temporal annotations are approximate, so this is advisory'


def lintable(link: Link, index: IdIndex) -> bool:
    """TLINKs with a legal relType and both endpoints resolving to the right class."""
    if link.kind != LinkKind.TLINK or link.rel_type not in REL_TYPES[LinkKind.TLINK]:
        return False
    for slots, slot, value in ((SOURCE_SLOTS, link.source_slot, link.source), (TARGET_SLOTS, link.target_slot, link.target)):
        if value is None or value not in index.bindings:
            return False
        if id_kind(value) != slots[LinkKind.TLINK].get(slot):
            return False
    return True


def _constraints(tlinks: list[Link], index: IdIndex) -> list[Constraint]:
    constraints = []
    for position, link in enumerate(tlinks):
        if lintable(link, index):
            label = link.lid or f'TLINK:{position}'
            constraints.append(Constraint(label, link.source, link.target, to_allen(link.rel_type).bit))
    return constraints


def _warning(witness: list[Constraint], positions: dict[str, object], edge: Optional[tuple[str, str]] = None) -> Diagnostic:
    labels = [c.label for c in witness]
    position = min((positions[label] for label in labels), key=lambda p: p.offset, default=SYNTHETIC)
    if edge:
        message = f'TLINKs {", ".join(labels)} relate {edge[0]} and {edge[1]} incompatibly'
    else:
        message = f'TLINKs {", ".join(labels)} cannot all hold at once'
    return diagnostic('W101', f'{message} ({FUZZINESS_CAVEAT})', position, labels)


def consistency_lint(tlinks: list[Link], index: IdIndex, doc: Optional[Document] = None) -> list[Diagnostic]:
    """Advisory W101 warnings for TLINKs that admit no consistent interval layout.

    Parallel links over one pair are intersected first; every pair left with
    no relation is reported with that pair as witness. Otherwise path
    consistency runs per connected group of links and reports at most one
    conflict per group, with a witness shrunk by deletion filtering. Every
    TLINK names one basic relation, and path consistency decides such
    networks, so silence means a consistent layout exists.
    """
    constraints = _constraints(tlinks, index)
    order = {c.label: i for i, c in enumerate(constraints)}
    positions = {}
    for i, link in enumerate(tlinks):
        label = link.lid or f'TLINK:{i}'
        positions.setdefault(label, doc.position(f'TLINK:{i}') if doc else SYNTHETIC)

    warnings = []
    emptied: set[frozenset[str]] = set()
    for pair, parallel in _parallel_groups(constraints).items():
        if first_conflict(parallel) is not None:
            witness = minimize(parallel, frozenset(c.label for c in parallel))
            edge = (witness[0].source, witness[0].target)
            warnings.append(_warning(sorted(witness, key=lambda c: order[c.label]), positions, edge))
            emptied.add(pair)

    for group in components(constraints):
        if any(frozenset((c.source, c.target)) in emptied for c in group):
            continue
        conflict = first_conflict(group)
        if conflict is not None:
            witness = minimize(group, conflict.support)
            warnings.append(_warning(sorted(witness, key=lambda c: order[c.label]), positions))

    logger.debug(f'consistency lint over {len(constraints)} TLINKs: {len(warnings)} warnings')
    return warnings


def _parallel_groups(constraints: list[Constraint]) -> dict[frozenset[str], list[Constraint]]:
    groups: dict[frozenset[str], list[Constraint]] = {}
    for constraint in constraints:
        groups.setdefault(frozenset((constraint.source, constraint.target)), []).append(constraint)
    return groups
