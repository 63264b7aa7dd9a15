from src.domains.parsing.parse_document import parse
from src.domains.repairs.escape_source import escape_source, is_well_formed
from src.models.parse import ParseMode
from src.models.repair import RepairActionKind
from tests.fixture_spec import TestFixture


class TestEscapeSource(TestFixture):
    def test_escape_source_success(self):
        data, actions = escape_source(self._fixture_bytes('legacy_bare_ampersand'))

        assert [(a.kind, a.before, a.after) for a in actions] == [
            (RepairActionKind.ESCAPE_CHARS, '&', '&amp;'),
            (RepairActionKind.ESCAPE_CHARS, '<', '&lt;'),
        ]
        assert (actions[0].position.line, actions[0].position.column) == (6, 13)
        assert is_well_formed(data)
        doc, errors = parse(data, ParseMode.LENIENT)
        assert errors == []
        assert doc.text_content() == '\nShares of AT&T rose by < 5% & held.\n'


    def test_latin1_reread(self):
        data, actions = escape_source(self._fixture_bytes('legacy_latin1'))

        assert [(a.kind, a.before, a.after) for a in actions] == [(RepairActionKind.ESCAPE_CHARS, 'utf-8', 'latin-1')]
        assert actions[0].position.line == 4
        assert 'café' in data.decode('utf-8')


    def test_well_formed_input_unchanged(self):
        data = self._fixture_bytes('entities_roundtrip')

        assert escape_source(data) == (data, [])


    def test_verbatim_regions_untouched(self):
        source = self._wrap('A & B <!-- C & D --> <![CDATA[E & F]]>').encode('utf-8')

        data, actions = escape_source(source)

        assert len(actions) == 1
        assert b'A &amp; B <!-- C & D --> <![CDATA[E & F]]>' in data


    def test_declared_encoding_failure_left_to_parser(self):
        data = self._fixture_bytes('e001_bad_encoding')

        assert escape_source(data) == (data, [])


    def test_broken_markup_left_to_parser(self):
        data = self._fixture_bytes('e001_not_well_formed')

        escaped, actions = escape_source(data)

        assert actions == []
        assert escaped == data
