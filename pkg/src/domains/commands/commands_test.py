import json

from src.domains.commands.cmd_lint import cmd_lint
from src.domains.commands.cmd_repair import cmd_repair
from src.domains.commands.cmd_validate import cmd_validate
from src.models.repair import DanglingPolicy, RepairConfig
from tests.fixture_spec import TestFixture


class TestCmdValidate(TestFixture):
    def test_cmd_validate_success(self, capsys):
        assert cmd_validate([self._fixture_path('clean')]) == 0
        assert capsys.readouterr().out.rstrip().endswith('1 file, 0 errors, 0 warnings')


    def test_findings_exit_one(self, capsys):
        paths = [self._fixture_path('clean'), self._fixture_path('e005_duplicate_id')]

        assert cmd_validate(paths) == 1


    def test_fatal_dominates(self, capsys):
        paths = [self._fixture_path('e005_duplicate_id'), self._fixture_path('e001_not_well_formed')]

        assert cmd_validate(paths) == 2


    def test_corpus_json_is_stable(self, fixture_copy, capsys):
        code = cmd_validate([str(fixture_copy)], as_json=True)
        first = capsys.readouterr().out
        cmd_validate([str(fixture_copy)], as_json=True)
        second = capsys.readouterr().out

        assert code == 2
        assert first == second
        payload = json.loads(first)
        by_name = {f['path'].rsplit('/', 1)[-1][:-4]: f for f in payload['files']}
        assert [f['path'] for f in payload['files']] == sorted(f['path'] for f in payload['files'])
        for name, codes in self.fixture_codes.items():
            assert sorted({d['code'] for d in by_name[name]['diagnostics']}) == codes
        for name in self.fatal_fixtures:
            assert by_name[name]['error']


    def test_extent_info(self, capsys):
        assert cmd_validate([self._fixture_path('example1_dct')], as_json=True, extent_info=True) == 0

        payload = json.loads(capsys.readouterr().out)
        assert payload['aggregate'] == {'I201': 1}


class TestCmdLint(TestFixture):
    def test_cmd_lint_success(self, capsys):
        paths = [self._fixture_path('w101_example5'), self._fixture_path('w101_cycle')]

        assert cmd_lint(paths, as_json=True) == 0

        payload = json.loads(capsys.readouterr().out)
        assert payload['aggregate'] == {'W101': 2}


    def test_errors_still_fail(self, capsys):
        assert cmd_lint([self._fixture_path('e006_phantom_reference')]) == 1


class TestCmdRepair(TestFixture):
    def test_cmd_repair_out_dir(self, fixture_copy, tmp_path, capsys):
        names = sorted(self.repair_kinds)
        paths = [str(fixture_copy / f'{name}.tml') for name in names]
        out_dir = tmp_path / 'strict'

        assert cmd_repair(paths, out_dir=str(out_dir)) == 0

        assert sorted(p.stem for p in out_dir.iterdir()) == names
        assert cmd_validate([str(out_dir)]) == 0
        capsys.readouterr()


    def test_repaired_files_are_fixpoints(self, fixture_copy, tmp_path, capsys):
        paths = [str(fixture_copy / f'{name}.tml') for name in sorted(self.repair_kinds)]
        first, second = tmp_path / 'first', tmp_path / 'second'
        cmd_repair(paths, out_dir=str(first))

        cmd_repair([str(first)], out_dir=str(second), as_json=True)

        payload = json.loads(capsys.readouterr().out)
        assert all(f['actions'] == [] for f in payload['files'])
        for path in first.iterdir():
            assert (second / path.name).read_bytes() == path.read_bytes()


    def test_irreparable_exit_one(self, copy_fixture, capsys):
        assert cmd_repair([str(copy_fixture('legacy_metadata_only'))], in_place=True) == 1
        assert 'irreparable E009' in capsys.readouterr().out


    def test_dry_run(self, copy_fixture, capsys):
        source = copy_fixture('legacy_timebank')

        assert cmd_repair([str(source)], in_place=True, dry_run=True, as_json=True) == 0

        payload = json.loads(capsys.readouterr().out)
        assert [a['kind'] for a in payload['files'][0]['actions']] == [str(k) for k in self.repair_kinds['legacy_timebank']]
        assert source.read_bytes() == self._fixture_bytes('legacy_timebank')


    def test_dangling_policy(self, copy_fixture, capsys):
        cfg = RepairConfig(dangling_policy=DanglingPolicy.KEEP_AND_FAIL)

        assert cmd_repair([str(copy_fixture('e006_phantom_reference'))], dry_run=True, cfg=cfg) == 1
