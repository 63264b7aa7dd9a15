"""Escaping and decoding of XML character data."""
from functools import lru_cache
from xml.sax.saxutils import escape

from lxml import etree

_FRAGMENT_PARSER = etree.XMLParser(resolve_entities=False, no_network=True, load_dtd=False)


def secure_parser() -> etree.XMLParser:
    """Parser with external entities, DTD loading and network access disabled."""
    return etree.XMLParser(
        resolve_entities=False,
        no_network=True,
        load_dtd=False,
        dtd_validation=False,
        huge_tree=False,
        remove_blank_text=False,
        strip_cdata=False,
    )


@lru_cache(maxsize=4096)
def decode_text(raw: str) -> str:
    """Decode the source spelling of character data (entities, CDATA, line ends)."""
    if '&' not in raw and '<' not in raw and '\r' not in raw:
        return raw
    try:
        fragment = etree.fromstring(f'<x>{raw}</x>'.encode('utf-8'), _FRAGMENT_PARSER)
    except etree.XMLSyntaxError:
        return raw
    return fragment.xpath('string()')


@lru_cache(maxsize=4096)
def decode_attribute(raw_value: str) -> str:
    """Decode a quoted attribute value as an XML processor would."""
    if '&' not in raw_value and not any(c in raw_value for c in '\t\n\r'):
        return raw_value
    quoted = '"' + raw_value.replace('"', '&quot;') + '"'
    try:
        fragment = etree.fromstring(f'<x a={quoted}/>'.encode('utf-8'), _FRAGMENT_PARSER)
    except etree.XMLSyntaxError:
        return raw_value
    return fragment.get('a')


def escape_text(text: str) -> str:
    return escape(text)


def escape_attribute(value: str) -> str:
    return escape(value, {'"': '&quot;', '\n': '&#10;', '\r': '&#13;', '\t': '&#9;'})
