"""Mutable working copy of a Document that repair actions are replayed on."""
import copy
import re
from typing import Any, Optional

from src.lib.xml.text import decode_text, escape_text
from src.models.document import Document, LIST_FIELDS
from src.models.repair import Edit, RepairAction

KEY = re.compile(r'^([A-Z0-9]+):(\d+)(@.*)?$')


class Workspace:
    """Applies edits to the plain-data dump of a document.

    Removed elements stay in their list until `commit`, so every key an
    action mentions keeps pointing at the same element while the action runs.
    `commit` then drops them and renumbers the lists in document order.
    """

    def __init__(self, doc: Document):
        self.state: dict[str, Any] = doc.model_dump()
        self.removed: set[str] = set()
        self.structural = False

    def document(self) -> Document:
        return Document.model_validate(self.state)

    def element(self, key: str) -> dict:
        tag, index = key.split(':')
        return self.state[LIST_FIELDS[tag]][int(index)]

    def apply_action(self, action: RepairAction):
        for edit in action.edits:
            self.apply(edit)
        self.commit()

    def apply(self, edit: Edit):
        # stored segments get reindexed in place
        value = copy.deepcopy(edit.value)
        if edit.op == 'set':
            self._set(edit.key, edit.field, value)
        elif edit.op == 'remove':
            self._remove(edit.key)
        elif edit.op == 'append':
            self.state[LIST_FIELDS[edit.key]].append(value)
            self.structural = True
        elif edit.op == 'insert':
            self._insert(edit.key, value)
        elif edit.op == 'wrap':
            self._wrap(value)

    def _set(self, key: str, field: str, value: Any):
        target = self.state if key == 'DOCUMENT' else self.element(key)
        *path, name = field.split('.')
        for part in path:
            if target.get(part) is None:
                target[part] = {}
            target = target[part]
        if value is None and path and path[-1] == 'extra':
            target.pop(name, None)
        else:
            target[name] = value

    def containers(self) -> list[list[dict]]:
        return [
            self.state['content'],
            *(block['content'] for block in self.state['dcts']),
            *(region['content'] for region in self.state['texts']),
        ]

    def _locate(self, key: str) -> tuple[list[dict], int]:
        tag, index = key.split(':')
        for content in self.containers():
            for position, segment in enumerate(content):
                if segment['kind'] == 'ref' and segment['tag'] == tag and segment['index'] == int(index):
                    return content, position
        raise KeyError(key)

    def _remove(self, key: str):
        content, position = self._locate(key)
        del content[position]
        if content is self.state['content']:
            _tidy_line(content, position)
        self.removed.add(key)
        self.structural = True

    def _insert(self, key: str, segments: list[dict]):
        if key:
            content, position = self._locate(key)
        else:
            content, position = self.state['content'], 0
        content[position:position] = segments
        self.structural = True

    def _wrap(self, cuts: dict):
        """Move root content between two cuts into a new TEXT element.

        A cut is [segment index, character offset into that segment's text].
        """
        content = self.state['content']
        (first, first_offset), (last, last_offset) = cuts['start'], cuts['end']
        if _split(content, last, last_offset):
            last += 1
        elif last_offset and last < len(content):
            last += 1
        if _split(content, first, first_offset):
            first += 1
            last += 1
        index = len(self.state['texts'])
        self.state['texts'].append({'content': content[first:last], 'extra': {}})
        content[first:last] = [{'kind': 'ref', 'tag': 'TEXT', 'index': index, 'inline': False}]
        self.structural = True

    def commit(self):
        if not self.structural:
            return
        for content in self.containers():
            _merge_raw(content)
        self._reindex()
        self.removed.clear()
        self.structural = False

    def _reindex(self):
        """Renumber every list in document order, dropping removed elements."""
        order: dict[str, list[int]] = {tag: [] for tag in LIST_FIELDS}

        def walk(content: list[dict]):
            for segment in content:
                if segment['kind'] != 'ref':
                    continue
                if segment['index'] in order[segment['tag']]:
                    continue
                order[segment['tag']].append(segment['index'])
                if segment['tag'] == 'DCT':
                    walk(self.state['dcts'][segment['index']]['content'])
                elif segment['tag'] == 'TEXT':
                    walk(self.state['texts'][segment['index']]['content'])

        walk(self.state['content'])
        mapping = {
            tag: {old: new for new, old in enumerate(i for i in indexes if f'{tag}:{i}' not in self.removed)}
            for tag, indexes in order.items()
        }

        for content in self.containers():
            for segment in content:
                if segment['kind'] == 'ref':
                    segment['index'] = mapping[segment['tag']][segment['index']]
        for tag, renumber in mapping.items():
            items = self.state[LIST_FIELDS[tag]]
            self.state[LIST_FIELDS[tag]] = [items[old] for old, _ in sorted(renumber.items(), key=lambda pair: pair[1])]

        source_map = {}
        for key, position in self.state['source_map'].items():
            renamed = _rename_key(key, mapping)
            if renamed is not None:
                source_map[renamed] = position
        self.state['source_map'] = source_map


def _rename_key(key: str, mapping: dict[str, dict[int, int]]) -> Optional[str]:
    match = KEY.match(key)
    if not match or match.group(1) not in mapping:
        return key
    tag, index, attribute = match.group(1), int(match.group(2)), match.group(3) or ''
    if index not in mapping[tag]:
        return None
    return f'{tag}:{mapping[tag][index]}{attribute}'


def _split(content: list[dict], position: int, offset: int) -> bool:
    """Split the raw segment at `position` before character `offset`; True when split."""
    if position >= len(content) or content[position]['kind'] != 'raw':
        return False
    segment = content[position]
    text = segment['text']
    if not 0 < offset < len(text):
        return False
    raw = segment.get('raw')
    if raw is not None and raw == text:
        head_raw, tail_raw = raw[:offset], raw[offset:]
    else:
        head_raw = tail_raw = None
    content[position:position + 1] = [
        {'kind': 'raw', 'text': text[:offset], 'raw': head_raw},
        {'kind': 'raw', 'text': text[offset:], 'raw': tail_raw},
    ]
    return True


def _strip_line_end(segment: dict, leading: bool):
    """Drop a newline at the start (leading) or trailing blanks at the end of a raw segment."""
    text, raw = segment['text'], segment.get('raw')
    if leading:
        cut = 2 if text.startswith('\r\n') else 1
        segment['text'] = text[cut:]
        segment['raw'] = raw[cut:] if raw is not None and raw.startswith(text[:cut]) else None
    else:
        segment['text'] = text.rstrip(' \t')
        segment['raw'] = raw.rstrip(' \t') if raw is not None else None


def _tidy_line(content: list[dict], position: int):
    """After removing an element that sat alone on its line, remove the emptied line."""
    if position == 0 or position >= len(content):
        return
    before, after = content[position - 1], content[position]
    if before['kind'] != 'raw' or after['kind'] != 'raw':
        return
    line_start = before['text'].rsplit('\n', 1)
    if len(line_start) < 2 or line_start[1].strip() or not after['text'].startswith(('\n', '\r\n')):
        return
    _strip_line_end(before, leading=False)
    _strip_line_end(after, leading=True)


def _merge_raw(content: list[dict]):
    """Join neighbouring raw segments and drop empty ones."""
    merged: list[dict] = []
    for segment in content:
        if segment['kind'] == 'raw' and not segment['text'] and not segment.get('raw'):
            continue
        if segment['kind'] == 'raw' and merged and merged[-1]['kind'] == 'raw':
            previous = merged[-1]
            previous['raw'] = _spelling(previous) + _spelling(segment)
            previous['text'] += segment['text']
            continue
        merged.append(segment)
    content[:] = merged


def _spelling(segment: dict) -> str:
    raw = segment.get('raw')
    if raw is not None and decode_text(raw) == segment['text']:
        return raw
    return escape_text(segment['text'])
