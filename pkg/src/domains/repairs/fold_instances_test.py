from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.fold_instances import fold_instances
from src.models.document import InstanceOrigin
from src.models.repair import RepairActionKind, RepairConfig
from tests.fixture_spec import TestFixture


class TestFoldInstances(TestFixture):
    def test_fold_instances_success(self):
        doc = self._parse_fixture('e011_single_makeinstance')

        actions = fold_instances(doc, RepairConfig())
        repaired = apply_actions(doc, actions)

        assert [(a.kind, a.before, a.after) for a in actions] == [
            (RepairActionKind.FOLD_MAKEINSTANCE, 'MAKEINSTANCE ei1', 'EVENT e1 ei1'),
        ]
        assert repaired.makeinstances == []
        instance = repaired.events[0].inline_instance
        assert (instance.eiid, instance.tense, instance.aspect, instance.pos) == ('ei1', 'PAST', 'NONE', 'VERB')
        assert repaired.instances[0].origin == InstanceOrigin.INLINE


    def test_folds_run_backwards(self):
        doc = self._parse_fixture('legacy_timebank')

        actions = fold_instances(doc, RepairConfig())
        repaired = apply_actions(doc, actions)

        assert [a.before for a in actions] == ['MAKEINSTANCE ei2', 'MAKEINSTANCE ei1']
        assert [e.inline_instance.eiid for e in repaired.events] == ['ei1', 'ei2']


    def test_instances_with_signal_stay(self):
        assert fold_instances(self._parse_fixture('legacy_signal_makeinstance'), RepairConfig()) == []


    def test_second_instances_stay(self):
        assert fold_instances(self._parse_fixture('clean'), RepairConfig()) == []


    def test_folding_disabled(self):
        cfg = RepairConfig(fold_single_instances=False)

        assert fold_instances(self._parse_fixture('e011_single_makeinstance'), cfg) == []
