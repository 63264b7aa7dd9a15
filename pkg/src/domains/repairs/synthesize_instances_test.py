from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.synthesize_instances import synthesize_instances
from src.models.repair import RepairActionKind, RepairConfig
from tests.fixture_spec import TestFixture


class TestSynthesizeInstances(TestFixture):
    def test_reference_moves_to_only_instance(self):
        doc = self._parse_fixture('e012_wrong_class')

        actions = synthesize_instances(doc, RepairConfig())
        repaired = apply_actions(doc, actions)

        assert [(a.kind, a.before, a.after) for a in actions] == [(RepairActionKind.SYNTHESIZE_INSTANCE, 'e1', 'ei1')]
        assert len(actions[0].edits) == 1
        assert repaired.tlinks[0].source == 'ei1'


    def test_uninstantiated_event_gets_inline_instance(self):
        doc = self._parse_fixture('legacy_uninstantiated_event')

        actions = synthesize_instances(doc, RepairConfig())
        repaired = apply_actions(doc, actions)

        assert [(a.before, a.after) for a in actions] == [('e7', 'ei7')]
        assert 'inline instance' in actions[0].rationale
        assert repaired.events[0].inline_instance.eiid == 'ei7'
        assert repaired.tlinks[0].source == 'ei7'


    def test_one_instance_for_repeated_references(self):
        doc = self._parse_text(self._wrap(
            'Stocks <EVENT class="OCCURRENCE" eid="e7">fell</EVENT>.',
            '<TLINK eventInstanceID="e7" lid="l1" relType="IS_INCLUDED" relatedToTime="t0" />\n'
            '<TLINK eventInstanceID="e7" lid="l2" relType="AFTER" relatedToTime="t0" />\n',
        ))

        actions = synthesize_instances(doc, RepairConfig())
        repaired = apply_actions(doc, actions)

        assert [a.after for a in actions] == ['ei7', 'ei7']
        assert [len(a.edits) for a in actions] == [2, 1]
        assert [link.source for link in repaired.tlinks] == ['ei7', 'ei7']


    def test_ambiguous_event_left_alone(self):
        doc = self._parse_text(self._wrap(
            'Stocks <EVENT class="OCCURRENCE" eid="e1">fell</EVENT>.',
            '<MAKEINSTANCE eiid="ei1" eventID="e1" polarity="POS" pos="VERB" />\n'
            '<MAKEINSTANCE eiid="ei2" eventID="e1" polarity="POS" pos="VERB" />\n'
            '<TLINK eventInstanceID="e1" lid="l1" relType="IS_INCLUDED" relatedToTime="t0" />\n',
        ))

        assert synthesize_instances(doc, RepairConfig()) == []


    def test_timex_in_event_slot_left_alone(self):
        assert synthesize_instances(self._parse_fixture('e012_timex_in_event_slot'), RepairConfig()) == []
