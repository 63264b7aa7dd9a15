import argparse

from .domains.commands.controller import register_commands


def register_routes(parser: argparse.ArgumentParser):
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')
    register_commands(subparsers)
