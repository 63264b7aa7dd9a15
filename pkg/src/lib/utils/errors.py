"""Exception hierarchy of the toolkit.

Rule violations are never raised; they travel as Diagnostic data. Exceptions
are reserved for conditions that stop an operation from producing a result.
"""
from typing import Any, Optional

EXIT_SUCCESS = 0
EXIT_FINDINGS = 1
EXIT_FATAL = 2


class TimeMLError(Exception):
    """Base error carrying a human readable detail and the CLI exit code it maps to."""

    exit_code: int = EXIT_FATAL

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class FatalParseError(TimeMLError):
    """The input is not well-formed XML or cannot be decoded; no Document exists."""

    def __init__(self, errors: list[Any]):
        self.errors = errors
        first = errors[0] if errors else None
        detail = f'{first.category}: {first.message}' if first else 'input could not be parsed'
        super().__init__(detail, EXIT_FATAL)


class IrreparableError(TimeMLError):
    """Repair finished but strict-validity errors remain.

    Attributes:
        codes: Sorted error codes that no repair action could remove
        actions: The actions planned before giving up
        document: The partially repaired document
    """

    def __init__(self, codes: list[str], actions: list[Any], document: Any = None):
        self.codes = sorted(set(codes))
        self.actions = actions
        self.document = document
        super().__init__(f'irreparable: {", ".join(self.codes)}', EXIT_FINDINGS)


class UndecidableError(TimeMLError):
    """The TEXT body boundary cannot be determined."""

    def __init__(self, detail: str):
        super().__init__(detail, EXIT_FINDINGS)
