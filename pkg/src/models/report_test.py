from src.models.diagnostic import Severity, diagnostic
from src.models.document import SourcePosition
from src.models.repair import RepairAction, RepairActionKind
from src.models.report import FileReport, RunReport
from tests.fixture_spec import TestFixture


class TestReports(TestFixture):
    def test_file_report_exit_codes(self):
        warning = diagnostic('W104', 'document has no DOCTYPE declaration')
        error = diagnostic('E007', 'document has no DCT')

        assert FileReport(path='a.tml', strict=True, diagnostics=[warning]).exit_code == 0
        assert FileReport(path='a.tml', diagnostics=[error]).exit_code == 1
        assert FileReport(path='a.tml', irreparable=['E009']).exit_code == 1
        assert FileReport(path='a.tml', error='boom', fatal=True).exit_code == 2


    def test_run_report_exit_code_is_the_worst(self):
        report = RunReport(files=[
            FileReport(path='a.tml', strict=True),
            FileReport(path='b.tml', fatal=True),
            FileReport(path='c.tml', irreparable=['E003']),
        ])

        assert report.exit_code == 2
        assert RunReport().exit_code == 0


    def test_aggregate_counts_by_code(self):
        report = RunReport(files=[
            FileReport(path='a.tml', diagnostics=[diagnostic('E007', 'x'), diagnostic('W104', 'y')]),
            FileReport(path='b.tml', diagnostics=[diagnostic('E007', 'z')]),
        ])

        assert report.aggregate == {'E007': 2, 'W104': 1}
        assert list(report.aggregate) == ['E007', 'W104']
        assert report.count(Severity.ERROR) == 2
        assert report.count(Severity.WARNING) == 1


    def test_to_json_success(self):
        action = RepairAction(
            kind=RepairActionKind.ADD_DOCTYPE, after='<!DOCTYPE TimeML SYSTEM "TimeML.dtd">',
            rationale='strict documents declare the TimeML DOCTYPE',
        )
        found = diagnostic('E006', 'ei9 names no element', SourcePosition(offset=40, line=3, column=5), ['l1', 'ei9'])
        report = RunReport(files=[FileReport(path='a.tml', diagnostics=[found], actions=[action])])

        data = report.to_json()

        assert data['aggregate'] == {'E006': 1}
        assert data['files'][0]['diagnostics'] == [{
            'code': 'E006', 'severity': 'ERROR', 'message': 'ei9 names no element',
            'line': 3, 'column': 5, 'ids': ['l1', 'ei9'],
        }]
        assert data['files'][0]['actions'][0]['kind'] == 'ADD_DOCTYPE'
        assert 'edits' not in data['files'][0]['actions'][0]
        assert data['files'][0]['error'] is None


    def test_diagnostic_drops_empty_ids(self):
        found = diagnostic('E003', 'EVENT without eid', ids=[None, '', 'e1'])

        assert found.involved_ids == ['e1']
        assert found.severity == Severity.ERROR
