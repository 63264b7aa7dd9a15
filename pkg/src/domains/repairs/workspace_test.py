from src.domains.parsing.serialize_document import serialize
from src.domains.repairs.add_dct import add_dct
from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.workspace import Workspace
from src.models.repair import Edit, RepairAction, RepairActionKind, RepairConfig
from tests.fixture_spec import TestFixture


def action(*edits: Edit) -> RepairAction:
    return RepairAction(kind=RepairActionKind.DROP_DANGLING_LINK, edits=list(edits))


class TestWorkspace(TestFixture):
    def test_remove_drops_emptied_line(self):
        source = self._fixture_bytes('e006_phantom_reference')
        doc = self._parse_fixture('e006_phantom_reference')

        repaired = apply_actions(doc, [action(Edit(op='remove', key='TLINK:1'))])

        line = b'<TLINK eventInstanceID="ei1" lid="l2" relType="BEFORE" relatedToEventInstance="ei9" />\n'
        assert serialize(repaired) == source.replace(line, b'')


    def test_positions_follow_renumbering(self):
        doc = self._parse_fixture('e006_phantom_reference')

        repaired = apply_actions(doc, [action(Edit(op='remove', key='TLINK:0'))])

        assert repaired.tlinks[0].lid == 'l2'
        assert repaired.position('TLINK:0') == doc.position('TLINK:1')
        assert repaired.position('TLINK:0', 'relatedToEventInstance') == doc.position('TLINK:1', 'relatedToEventInstance')
        assert 'TLINK:1' not in repaired.source_map


    def test_removed_keys_stable_within_action(self):
        doc = self._parse_fixture('clean')

        repaired = apply_actions(doc, [action(Edit(op='remove', key='TLINK:0'), Edit(op='remove', key='TLINK:1'))])

        assert repaired.tlinks == []
        assert [link.lid for link in repaired.slinks] == ['l3']


    def test_set_dotted_fields(self):
        doc = self._parse_text(self._wrap('<EVENT class="OCCURRENCE" confidence="0.9" eid="e1">fell</EVENT>'))
        workspace = Workspace(doc)

        workspace.apply(Edit(op='set', key='EVENT:0', field='extra.confidence', value=None))
        workspace.apply(Edit(op='set', key='EVENT:0', field='inline_instance.eiid', value='ei1'))
        workspace.apply(Edit(op='set', key='DOCUMENT', field='doctype', value=None))
        repaired = workspace.document()

        assert repaired.events[0].extra == {}
        assert repaired.events[0].inline_instance.eiid == 'ei1'
        assert repaired.doctype is None


    def test_wrap_splits_character_data(self):
        doc = self._parse_text('<TimeML>\nHEADER\nBody text here.\n</TimeML>')

        repaired = apply_actions(doc, [action(Edit(op='wrap', value={'start': [0, 8], 'end': [0, 23]}))])

        assert repaired.text_content() == 'Body text here.'
        assert repaired.preamble == '\nHEADER\n\n'
        assert serialize(repaired).endswith(b'<TimeML>\nHEADER\n<TEXT>Body text here.</TEXT>\n</TimeML>\n')


    def test_action_log_replays_twice(self):
        doc = self._parse_fixture('e007_missing_dct')
        actions = add_dct(doc, RepairConfig())
        logged = [a.model_dump() for a in actions]

        first = apply_actions(doc, actions)
        second = apply_actions(doc, actions)

        assert [a.model_dump() for a in actions] == logged
        assert second.structure() == first.structure()
        assert [t.tid for t in second.dct_timexes(second.dct)] == ['t0']
        assert [t.tid for t in second.timexes] == [t.tid for t in first.timexes]
        assert serialize(second) == serialize(first)
