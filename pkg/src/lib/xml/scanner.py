"""Markup scanner over well-formed XML source text.

lxml tells us whether a document is well-formed but not where each node
starts, nor how its text was spelled. The scanner splits the decoded source
into contiguous tokens carrying character spans so positions and verbatim
spellings survive parsing. It assumes its input already passed lxml.
"""
import bisect
import re
from dataclasses import dataclass, field
from typing import Optional

from src.models.document import SourcePosition

TOKEN = re.compile(r'''
    (?P<comment><!--.*?-->)
  | (?P<cdata><!\[CDATA\[.*?\]\]>)
  | (?P<pi><\?.*?\?>)
  | (?P<doctype><!DOCTYPE(?:[^\[>]|\[.*?\])*>)
  | (?P<end></(?P<end_name>[^\s>]+)\s*>)
  | (?P<start><(?P<name>[^\s/>!?]+)(?P<attrs>(?:\s+[^\s=/>]+\s*=\s*(?:"[^"]*"|'[^']*'))*)\s*(?P<empty>/)?>)
''', re.S | re.X)

ATTRIBUTE = re.compile(r'''([^\s=/>]+)\s*=\s*(?:"([^"]*)"|'([^']*)')''')


@dataclass
class Attribute:
    name: str
    raw_value: str
    start: int


@dataclass
class Token:
    """A contiguous piece of source.

    kind is one of text, cdata, comment, pi, doctype, start, end.
    """
    kind: str
    start: int
    end: int
    source: str
    name: Optional[str] = None
    empty: bool = False
    attributes: list[Attribute] = field(default_factory=list)


def scan(text: str) -> list[Token]:
    tokens = []
    cursor = 0
    for match in TOKEN.finditer(text):
        if match.start() > cursor:
            tokens.append(Token('text', cursor, match.start(), text[cursor:match.start()]))
        kind = match.lastgroup if match.lastgroup in ('comment', 'cdata', 'pi', 'doctype') else None
        if kind is None:
            kind = 'end' if match.group('end') else 'start'
        token = Token(kind, match.start(), match.end(), match.group(0))
        if kind == 'end':
            token.name = match.group('end_name')
        elif kind == 'start':
            token.name = match.group('name')
            token.empty = match.group('empty') is not None
            attrs_offset = match.start('attrs')
            for attr in ATTRIBUTE.finditer(match.group('attrs')):
                value = attr.group(2) if attr.group(2) is not None else attr.group(3)
                token.attributes.append(Attribute(attr.group(1), value, attrs_offset + attr.start()))
        tokens.append(token)
        cursor = match.end()
    if cursor < len(text):
        tokens.append(Token('text', cursor, len(text), text[cursor:]))
    return tokens


class PositionTable:
    """Maps character indexes of the decoded source to byte offsets, lines and columns."""

    def __init__(self, text: str, encoding: str, base_offset: int = 0):
        self.text = text
        self.encoding = encoding
        self.line_starts = [0] + [m.end() for m in re.finditer('\n', text)]
        self.line_bytes = []
        consumed = base_offset
        previous = 0
        for start in self.line_starts:
            consumed += len(text[previous:start].encode(encoding, errors='replace'))
            self.line_bytes.append(consumed)
            previous = start

    def at(self, index: int) -> SourcePosition:
        index = max(0, min(index, len(self.text)))
        line = bisect.bisect_right(self.line_starts, index) - 1
        start = self.line_starts[line]
        offset = self.line_bytes[line] + len(self.text[start:index].encode(self.encoding, errors='replace'))
        return SourcePosition(offset=offset, line=line + 1, column=index - start + 1)

    def at_line(self, line: int, column: int) -> SourcePosition:
        """Position for a 1-based line/column pair as reported by lxml."""
        line = max(1, min(line, len(self.line_starts)))
        start = self.line_starts[line - 1]
        end = self.line_starts[line] - 1 if line < len(self.line_starts) else len(self.text)
        return self.at(min(start + max(column, 1) - 1, end))
