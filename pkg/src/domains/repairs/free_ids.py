import re
from typing import Iterable, Optional

from src.models.document import IdIndex
from src.models.timeml import IdKind, id_kind, id_number

DIGITS = re.compile(r'\d+')


class IdAllocator:
    """Hands out identifiers no element binds, one class at a time.

    Numbering restarts at 1 for every class; `t0` is only ever handed out on request.
    """

    def __init__(self, taken: Iterable[str]):
        self.taken: set[str] = set(taken)

    @classmethod
    def of(cls, index: IdIndex) -> 'IdAllocator':
        return cls(index.bindings)

    def is_free(self, identifier: str) -> bool:
        return identifier not in self.taken

    def take(self, identifier: str) -> str:
        self.taken.add(identifier)
        return identifier

    def smallest(self, kind: IdKind) -> str:
        used = {id_number(value) for value in self.taken if id_kind(value) == kind}
        number = 1
        while number in used:
            number += 1
        return self.take(f'{kind.value}{number}')

    def preferred(self, kind: IdKind, hint: Optional[str]) -> str:
        """The hint's digits under the class prefix when free, else the smallest free number."""
        match = DIGITS.search(hint or '')
        if match:
            number = int(match.group())
            candidate = f'{kind.value}{number}'
            if (number > 0 or kind == IdKind.TIMEX) and self.is_free(candidate):
                return self.take(candidate)
        return self.smallest(kind)


def normalized(kind: IdKind, value: str) -> Optional[str]:
    """`value` rewritten into the grammar of `kind` by keeping its digits, if it has any."""
    match = DIGITS.search(value)
    if not match:
        return None
    return f'{kind.value}{int(match.group())}'
