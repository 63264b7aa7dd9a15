from src.lib.algebra.network import Constraint, ConstraintNetwork, components, first_conflict, minimize
from src.models.relation import AllenRelation, FULL_MASK
from tests.fixture_spec import TestFixture

B = AllenRelation


class TestConstraintNetwork(TestFixture):
    def test_get_defaults(self):
        network = ConstraintNetwork()

        assert network.get('a', 'a') == B.EQUALS.bit
        assert network.get('a', 'b') == FULL_MASK


    def test_add_stores_inverse(self):
        network = ConstraintNetwork()

        assert network.add(Constraint('l1', 'a', 'b', B.BEFORE.bit)) is None
        assert network.get('b', 'a') == B.AFTER.bit


    def test_parallel_constraints_conflict(self):
        network = ConstraintNetwork()
        network.add(Constraint('l1', 'a', 'b', B.BEFORE.bit))

        conflict = network.add(Constraint('l2', 'a', 'b', B.CONTAINS.bit))

        assert conflict is not None
        assert conflict.support == frozenset({'l1', 'l2'})


    def test_self_loop(self):
        network = ConstraintNetwork()

        assert network.add(Constraint('l1', 'a', 'a', B.EQUALS.bit)) is None
        assert network.add(Constraint('l2', 'a', 'a', B.BEFORE.bit)).support == frozenset({'l2'})


    def test_propagate_narrows_paths(self):
        network = ConstraintNetwork()
        network.add(Constraint('l1', 'a', 'b', B.BEFORE.bit))
        network.add(Constraint('l2', 'b', 'c', B.BEFORE.bit))

        assert network.propagate() is None
        assert network.get('a', 'c') == B.BEFORE.bit
        assert network.supported_by('a', 'c') == frozenset({'l1', 'l2'})


    def test_cycle_conflict_and_witness(self):
        constraints = [
            Constraint('l1', 'a', 'b', B.BEFORE.bit),
            Constraint('l2', 'b', 'c', B.BEFORE.bit),
            Constraint('l3', 'c', 'a', B.BEFORE.bit),
            Constraint('l4', 'c', 'd', B.DURING.bit),
        ]

        conflict = first_conflict(constraints)

        assert conflict is not None
        witness = minimize(constraints, conflict.support)
        assert sorted(c.label for c in witness) == ['l1', 'l2', 'l3']


    def test_components_split_disjoint_groups(self):
        constraints = [
            Constraint('l1', 'a', 'b', B.BEFORE.bit),
            Constraint('l2', 'x', 'y', B.BEFORE.bit),
            Constraint('l3', 'b', 'c', B.BEFORE.bit),
        ]

        groups = components(constraints)

        assert [[c.label for c in group] for group in groups] == [['l1', 'l3'], ['l2']]


    def test_consistent_network(self):
        constraints = [
            Constraint('l1', 'a', 'b', B.DURING.bit),
            Constraint('l2', 'b', 'c', B.MEETS.bit),
        ]

        assert first_conflict(constraints) is None
