"""Input decoding: encoding detection from the XML declaration."""
import codecs
import re
from typing import Optional

BOM = codecs.BOM_UTF8
DECLARATION = re.compile(rb'^\s*<\?xml[^>]*?encoding\s*=\s*["\']([A-Za-z0-9._-]+)["\']')
# canonical codec names
SUPPORTED_ENCODINGS = frozenset({'utf-8', 'iso8859-1', 'ascii'})


class DecodeFailure(Exception):
    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.message = message
        self.offset = offset


def declared_encoding(data: bytes) -> Optional[str]:
    match = DECLARATION.match(data[len(BOM):] if data.startswith(BOM) else data)
    return match.group(1).decode('ascii') if match else None


def detect_encoding(data: bytes) -> tuple[str, int]:
    """Return the codec of the input and the length of its byte order mark.

    Raises DecodeFailure for encodings other than UTF-8, latin-1 and ASCII.
    """
    bom = len(BOM) if data.startswith(BOM) else 0
    name = declared_encoding(data)
    if name is None:
        return 'utf-8', bom
    try:
        codec = codecs.lookup(name).name
    except LookupError:
        raise DecodeFailure(f'unknown encoding "{name}"', 0)
    if codec not in SUPPORTED_ENCODINGS:
        raise DecodeFailure(f'unsupported encoding "{name}" (UTF-8 and latin-1 only)', 0)
    if bom and codec != 'utf-8':
        raise DecodeFailure(f'UTF-8 byte order mark on a document declared "{name}"', 0)
    return codec, bom


def decode_source(data: bytes) -> tuple[str, str, int]:
    """Decode the input; returns (text, codec, bom length)."""
    codec, bom = detect_encoding(data)
    try:
        return data[bom:].decode(codec), codec, bom
    except UnicodeDecodeError as exc:
        raise DecodeFailure(f'bytes not valid {codec}: {exc.reason}', bom + exc.start)
