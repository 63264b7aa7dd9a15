from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.fix_enum_case import fix_enum_case, recased
from src.models.repair import RepairActionKind, RepairConfig
from src.models.timeml import BOOLEAN_VALUES, LinkKind, REL_TYPES
from tests.fixture_spec import TestFixture


class TestFixEnumCase(TestFixture):
    def test_fix_enum_case_success(self):
        doc = self._parse_fixture('e010_bad_enum')

        actions = fix_enum_case(doc, RepairConfig())
        repaired = apply_actions(doc, actions)

        assert [(a.kind, a.before, a.after) for a in actions] == [
            (RepairActionKind.FIX_ENUM_CASE, 'occurrence', 'OCCURRENCE'),
            (RepairActionKind.FIX_ENUM_CASE, 'is_included', 'IS_INCLUDED'),
        ]
        assert repaired.events[0].event_class == 'OCCURRENCE'
        assert repaired.tlinks[0].rel_type == 'IS_INCLUDED'
        assert actions[0].position == doc.position('EVENT:0', 'class')


    def test_booleans_are_lowercased(self):
        doc = self._parse_text(self._wrap(
            '<TIMEX3 anchorTimeID="t0" temporalFunction="TRUE" tid="t1" type="date" value="1998-02-05">yesterday</TIMEX3>'
        ))

        actions = fix_enum_case(doc, RepairConfig())

        assert sorted((a.before, a.after) for a in actions) == [('TRUE', 'true'), ('date', 'DATE')]


    def test_other_values_left_alone(self):
        doc = self._parse_text(self._wrap('<EVENT class="HAPPENING" eid="e1" eiid="ei1">fell</EVENT>'))

        assert fix_enum_case(doc, RepairConfig()) == []


    def test_recased(self):
        assert recased('before', REL_TYPES[LinkKind.TLINK]) == 'BEFORE'
        assert recased('False', BOOLEAN_VALUES) == 'false'
        assert recased('modal', REL_TYPES[LinkKind.TLINK]) is None
