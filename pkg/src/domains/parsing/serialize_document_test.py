import pytest

from src.domains.parsing.parse_document import parse
from src.domains.parsing.serialize_document import render_text, serialize, start_tag
from src.models.parse import ParseMode
from tests.fixture_spec import TestFixture

PARSEABLE = sorted(TestFixture.fixture_codes)


class TestSerializeDocument(TestFixture):
    @pytest.mark.parametrize('name', PARSEABLE)
    def test_round_trip_preserves_structure(self, name):
        doc = self._parse_fixture(name)

        again, errors = parse(serialize(doc), ParseMode.LENIENT)

        assert again is not None
        assert again.structure() == doc.structure()
        assert not any(e.fatal for e in errors)


    @pytest.mark.parametrize('name', PARSEABLE)
    def test_serialize_is_a_fixpoint(self, name):
        once = serialize(self._parse_fixture(name))
        twice = serialize(parse(once, ParseMode.LENIENT)[0])

        assert once == twice


    def test_canonical_document_is_byte_identical(self):
        data = self._fixture_bytes('clean')

        assert serialize(self._parse_fixture('clean')) == data


    def test_original_spellings_survive(self):
        out = serialize(self._parse_fixture('entities_roundtrip')).decode('utf-8')

        assert 'AT&amp;T and the caf&#233; chain' in out
        assert '<![CDATA[by < 5%]]>' in out
        assert '<!-- converted from the newswire feed -->' in out
        assert '<?annotator pass="2"?>' in out


    def test_attributes_sorted_and_empty_tags(self):
        assert start_tag('TLINK', {'relType': 'BEFORE', 'lid': 'l1'}, empty=True) == '<TLINK lid="l1" relType="BEFORE" />'
        assert start_tag('TEXT', {}) == '<TEXT>'


    def test_changed_text_is_escaped(self):
        assert render_text('a & b', 'a &amp; b') == 'a &amp; b'
        assert render_text('a < b', 'a &amp; b') == 'a &lt; b'
        assert render_text('plain', None) == 'plain'


    def test_unknown_form_dct_stays_self_closing(self):
        out = serialize(self._parse_fixture('example2_unknown_dct')).decode('utf-8')

        assert '<DCT><TIMEX3 tid="t0" value="XXXX-XX-XX" /></DCT>' in out


    def test_declaration_is_utf8(self):
        out = serialize(self._parse_fixture('legacy_timebank'))

        assert out.startswith(b'<?xml version="1.0" encoding="UTF-8"?>\n<TimeML>')
