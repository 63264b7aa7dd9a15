from src.models.document import EntityRef, Event, InstanceAttrs, Timex3
from src.models.timeml import LinkKind
from tests.fixture_spec import TestFixture


class TestDocumentModel(TestFixture):
    def test_event_attributes_include_inline_instance(self):
        event = Event.model_validate({
            'eid': 'e1', 'class': 'OCCURRENCE',
            'inline_instance': InstanceAttrs(eiid='ei1', tense='PAST'),
        })

        assert event.attributes() == {'eid': 'e1', 'class': 'OCCURRENCE', 'eiid': 'ei1', 'tense': 'PAST'}
        assert event.instance().event_id == 'e1'
        assert event.instance().origin == 'INLINE'


    def test_event_without_instance(self):
        assert Event(eid='e1').instance() is None


    def test_unknown_form_timex(self):
        assert Timex3(tid='t0', value='XXXX-XX-XX').is_unknown_form
        assert not Timex3(tid='t0', value='XXXX-XX-XX', surface_text='today').is_unknown_form
        assert not Timex3(tid='t0', value='1998-02-06').is_unknown_form


    def test_lists_and_handles_success(self):
        doc = self._parse_fixture('clean')

        assert [e.eid for e in doc.events] == ['e1', 'e2']
        assert [t.tid for t in doc.timexes] == ['t0', 't1']
        assert [link.lid for link in doc.links] == ['l1', 'l2', 'l3', 'l4']
        assert doc.links[2].kind == LinkKind.SLINK
        assert doc.links[0].signal_id == 's1'
        assert doc.dct is doc.dcts[0]
        assert len(doc.texts) == 1


    def test_instances_in_document_order(self):
        doc = self._parse_fixture('clean')

        assert [i.eiid for i in doc.instances] == ['ei1', 'ei2', 'ei3']
        assert [i.origin for i in doc.instances] == ['INLINE', 'INLINE', 'MAKEINSTANCE']


    def test_region_of_success(self):
        doc = self._parse_fixture('clean')

        assert doc.region_of(EntityRef(tag='TIMEX3', index=0)) == 'DCT'
        assert doc.region_of(EntityRef(tag='EVENT', index=0)) == 'TEXT'
        assert doc.region_of(EntityRef(tag='TLINK', index=0)) == 'ROOT'


    def test_text_content_inlines_extents(self):
        doc = self._parse_fixture('clean')

        assert doc.text_content().strip() == 'The company said profits rose in the second quarter.'


    def test_preamble_is_verbatim(self):
        doc = self._parse_fixture('example3_raw_newswire')

        assert 'AP900815-0044' in doc.preamble
        assert 'Associated Press Writer' in doc.preamble


    def test_position_of_element_and_attribute(self):
        doc = self._parse_fixture('clean')

        event = doc.position('EVENT:0')
        eid = doc.position('EVENT:0', 'eid')

        assert event.line == 7
        assert eid.line == 7
        assert eid.column > event.column
        assert doc.position('EVENT:0', 'missing') == event
        assert doc.position('EVENT:99').synthetic


    def test_structure_ignores_spellings(self):
        first = self._parse_text(self._wrap('AT&amp;T <EVENT class="OCCURRENCE" eid="e1" eiid="ei1">fell</EVENT>'))
        second = self._parse_text(self._wrap('AT&#38;T <EVENT class="OCCURRENCE" eid="e1" eiid="ei1">fell</EVENT>'))

        assert first.structure() == second.structure()
        assert first != second
