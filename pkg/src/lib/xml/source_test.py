import pytest

from src.lib.xml.source import BOM, DecodeFailure, declared_encoding, decode_source, detect_encoding
from tests.fixture_spec import TestFixture


class TestSource(TestFixture):
    def test_declared_encoding_success(self):
        assert declared_encoding(b'<?xml version="1.0" encoding="ISO-8859-1"?><a/>') == 'ISO-8859-1'
        assert declared_encoding(BOM + b"<?xml version='1.0' encoding='utf-8'?><a/>") == 'utf-8'
        assert declared_encoding(b'<?xml version="1.0"?><a/>') is None
        assert declared_encoding(b'<a/>') is None


    def test_detect_encoding_defaults_to_utf8(self):
        assert detect_encoding(b'<a/>') == ('utf-8', 0)
        assert detect_encoding(BOM + b'<a/>') == ('utf-8', 3)


    def test_detect_encoding_latin1(self):
        codec, bom = detect_encoding(b'<?xml version="1.0" encoding="latin-1"?><a/>')

        assert codec == 'iso8859-1'
        assert bom == 0


    def test_detect_encoding_unsupported(self):
        with pytest.raises(DecodeFailure) as exc:
            detect_encoding(self._fixture_bytes('e001_bad_encoding'))

        assert 'Shift_JIS' in exc.value.message


    def test_detect_encoding_unknown(self):
        with pytest.raises(DecodeFailure):
            detect_encoding(b'<?xml version="1.0" encoding="klingon"?><a/>')


    def test_decode_source_strips_bom(self):
        text, codec, bom = decode_source(BOM + '<a>é</a>'.encode('utf-8'))

        assert text == '<a>é</a>'
        assert (codec, bom) == ('utf-8', 3)


    def test_decode_source_reports_the_bad_byte(self):
        data = self._fixture_bytes('legacy_latin1')

        with pytest.raises(DecodeFailure) as exc:
            decode_source(data)

        assert exc.value.offset == data.index(b'\xe9')
