import os
from typing import Optional

from src.domains.parsing.parse_document import parse
from src.lib.utils.config import FIXTURE_DIR
from src.models.document import Document
from src.models.parse import ParseMode
from src.models.repair import RepairActionKind


class TestFixture:
    # codes reported by a default validation run, deduplicated and sorted
    fixture_codes = {
        'clean': [],
        'e002_unknown_attribute': ['E002'],
        'e002_unknown_element': ['E002'],
        'e003_missing_class': ['E003'],
        'e004_malformed_id': ['E004'],
        'e005_duplicate_id': ['E005'],
        'e006_phantom_reference': ['E006'],
        'e007_missing_dct': ['E007'],
        'e008_bad_dct': ['E008'],
        'e009_missing_text': ['E009', 'W103'],
        'e010_bad_enum': ['E010'],
        'e011_single_makeinstance': ['E011'],
        'e012_timex_in_event_slot': ['E012'],
        'e012_wrong_class': ['E012'],
        'w101_cycle': [],
        'w101_example5': [],
        'w103_outside_text': ['W103'],
        'w104_no_doctype': ['W104'],
        'example1_dct': [],
        'example2_unknown_dct': [],
        'example3_raw_newswire': ['E007', 'E009', 'W103', 'W104'],
        'example4_during': [],
        'legacy_dangling_makeinstance': ['E006'],
        'legacy_malformed_refs': ['E004', 'E011'],
        'legacy_metadata_only': ['E007', 'E009', 'W104'],
        'legacy_no_annotations': ['E007', 'E009', 'W104'],
        'legacy_publication_time': ['E007'],
        'legacy_signal_makeinstance': ['E011'],
        'legacy_timebank': ['E007', 'E011', 'W103', 'W104'],
        'legacy_uninstantiated_event': ['E012'],
        'entities_roundtrip': [],
        'dct_inside_text': [],
        'multiple_dct': ['E007'],
        'multiple_text': ['E009'],
    }

    # not well-formed or undecodable as given
    fatal_fixtures = ['e001_bad_encoding', 'e001_not_well_formed', 'legacy_bare_ampersand', 'legacy_latin1']

    lint_codes = {
        'w101_example5': ['W101'],
        'w101_cycle': ['W101'],
        'clean': [],
        'example4_during': [],
    }

    # action kinds a repair run logs, in order
    repair_kinds = {
        'clean': [],
        'e004_malformed_id': [RepairActionKind.RENAME_ID],
        'e005_duplicate_id': [RepairActionKind.RENUMBER_DUPLICATE, RepairActionKind.RETARGET_REFERENCE],
        'e006_phantom_reference': [RepairActionKind.DROP_DANGLING_LINK],
        'e007_missing_dct': [RepairActionKind.ADD_DCT],
        'e009_missing_text': [RepairActionKind.WRAP_TEXT],
        'e010_bad_enum': [RepairActionKind.FIX_ENUM_CASE, RepairActionKind.FIX_ENUM_CASE],
        'e011_single_makeinstance': [RepairActionKind.FOLD_MAKEINSTANCE],
        'e012_wrong_class': [RepairActionKind.SYNTHESIZE_INSTANCE],
        'w104_no_doctype': [RepairActionKind.ADD_DOCTYPE],
        'example3_raw_newswire': [RepairActionKind.WRAP_TEXT, RepairActionKind.ADD_DCT, RepairActionKind.ADD_DOCTYPE],
        'legacy_dangling_makeinstance': [RepairActionKind.DROP_DANGLING_LINK] * 3,
        'legacy_malformed_refs': [RepairActionKind.RENAME_ID, RepairActionKind.RENAME_ID, RepairActionKind.FOLD_MAKEINSTANCE],
        'legacy_no_annotations': [RepairActionKind.WRAP_TEXT, RepairActionKind.ADD_DCT, RepairActionKind.ADD_DOCTYPE],
        'legacy_publication_time': [RepairActionKind.ADD_DCT],
        'legacy_timebank': [
            RepairActionKind.FOLD_MAKEINSTANCE, RepairActionKind.FOLD_MAKEINSTANCE,
            RepairActionKind.ADD_DCT, RepairActionKind.ADD_DOCTYPE,
        ],
        'legacy_uninstantiated_event': [RepairActionKind.SYNTHESIZE_INSTANCE],
    }

    irreparable = {
        'e002_unknown_attribute': ['E002'],
        'e002_unknown_element': ['E002'],
        'e003_missing_class': ['E003'],
        'e008_bad_dct': ['E008'],
        'e012_timex_in_event_slot': ['E012'],
        'legacy_metadata_only': ['E009'],
        'legacy_signal_makeinstance': ['E011'],
        'multiple_dct': ['E007'],
        'multiple_text': ['E009'],
    }


    def _fixture_path(self, name: str) -> str:
        return os.path.join(FIXTURE_DIR, f'{name}.tml')


    def _fixture_bytes(self, name: str) -> bytes:
        with open(self._fixture_path(name), 'rb') as file:
            return file.read()


    def _parse_fixture(self, name: str, mode: Optional[ParseMode] = None) -> Document:
        doc, _ = parse(self._fixture_bytes(name), mode or ParseMode.LENIENT)
        assert doc is not None, f'{name} did not parse'
        return doc


    def _parse_text(self, text: str, mode: Optional[ParseMode] = None) -> Document:
        doc, _ = parse(text.encode('utf-8'), mode or ParseMode.LENIENT)
        assert doc is not None
        return doc


    def _wrap(self, text_body: str, root_extra: str = '', dct: bool = True) -> str:
        """A minimal strict document around a TEXT body."""
        dct_element = (
            '<DCT><TIMEX3 functionInDocument="CREATION_TIME" tid="t0" type="DATE" value="1998-02-06">02/06/1998</TIMEX3></DCT>\n'
            if dct else ''
        )
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<!DOCTYPE TimeML SYSTEM "TimeML.dtd">\n'
            '<TimeML>\n'
            f'{dct_element}'
            f'<TEXT>\n{text_body}\n</TEXT>\n'
            f'{root_extra}'
            '</TimeML>\n'
        )
