import argparse

from src.domains.commands.cmd_lint import cmd_lint
from src.domains.commands.cmd_repair import cmd_repair
from src.domains.commands.cmd_validate import cmd_validate
from src.models.repair import DanglingPolicy, RepairConfig


def validate(args: argparse.Namespace) -> int:
    return cmd_validate(args.paths, as_json=args.json, consistency=args.consistency, extent_info=args.extent_info)


def repair(args: argparse.Namespace) -> int:
    cfg = RepairConfig(dangling_policy=args.dangling_policy) if args.dangling_policy else RepairConfig()
    return cmd_repair(args.paths, in_place=args.in_place, out_dir=args.out, dry_run=args.dry_run, as_json=args.json, cfg=cfg)


def lint(args: argparse.Namespace) -> int:
    return cmd_lint(args.paths, as_json=args.json)


def register_commands(subparsers: argparse._SubParsersAction):
    validate_parser = subparsers.add_parser('validate', help='Check files for TimeML-strict conformance.')
    validate_parser.add_argument('--json', action='store_true', help='Print the report as JSON.')
    validate_parser.add_argument('--consistency', action='store_true', help='Also run the temporal consistency lint (W101).')
    validate_parser.add_argument('--extent-info', action='store_true', help='Report multi-word extents (I201).')
    validate_parser.add_argument('paths', nargs='+', metavar='PATH', help='Files or directories of *.tml/*.xml files.')
    validate_parser.set_defaults(handler=validate)

    repair_parser = subparsers.add_parser('repair', help='Repair legacy TimeML into TimeML-strict form.')
    destination = repair_parser.add_mutually_exclusive_group(required=True)
    destination.add_argument('--in-place', action='store_true', help='Overwrite each repaired file.')
    destination.add_argument('--out', metavar='DIR', help='Write repaired files into DIR by basename.')
    destination.add_argument('--dry-run', action='store_true', help='Print the repair plan only.')
    repair_parser.add_argument('--json', action='store_true', help='Print the report as JSON.')
    repair_parser.add_argument(
        '--dangling-policy', choices=[policy.value for policy in DanglingPolicy], default=None,
        help='DROP dangling links (default) or KEEP_AND_FAIL.',
    )
    repair_parser.add_argument('paths', nargs='+', metavar='PATH', help='Files or directories of *.tml/*.xml files.')
    repair_parser.set_defaults(handler=repair)

    lint_parser = subparsers.add_parser('lint', help='Validate with the temporal consistency lint.')
    lint_parser.add_argument('--json', action='store_true', help='Print the report as JSON.')
    lint_parser.add_argument('paths', nargs='+', metavar='PATH', help='Files or directories of *.tml/*.xml files.')
    lint_parser.set_defaults(handler=lint)
