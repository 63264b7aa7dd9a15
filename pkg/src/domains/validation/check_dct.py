from src.models.diagnostic import Diagnostic, diagnostic
from src.models.document import DOCUMENT_START, Document, EntityRef, RawSegment
from src.models.timeml import FunctionInDocument


def check_dct(doc: Document) -> list[Diagnostic]:
    """E007 unless the document has exactly one DCT; E008 for each malformed DCT.

    A DCT holds exactly one TIMEX3 and nothing else, whitespace included.
    Its timex is the unknown form or carries functionInDocument="CREATION_TIME".
    """
    found = []
    if not doc.dcts:
        found.append(diagnostic('E007', 'document has no DCT', DOCUMENT_START))
    for index, block in enumerate(doc.dcts):
        position = doc.position(f'DCT:{index}')
        if index > 0:
            found.append(diagnostic('E007', f'document has {len(doc.dcts)} DCT elements', position))

        timexes = [s for s in block.content if isinstance(s, EntityRef) and s.tag == 'TIMEX3']
        strays = [s for s in block.content if not (isinstance(s, EntityRef) and s.tag == 'TIMEX3')]
        if len(timexes) != 1:
            found.append(diagnostic('E008', f'DCT holds {len(timexes)} TIMEX3 elements instead of one', position))
        if strays:
            texts = sum(1 for s in strays if isinstance(s, RawSegment))
            detail = 'text' if texts == len(strays) else 'nodes'
            found.append(diagnostic('E008', f'DCT holds stray {detail} besides its TIMEX3', position))

        for ref in timexes:
            timex = doc.timexes[ref.index]
            if timex.is_unknown_form or timex.function_in_document == FunctionInDocument.CREATION_TIME:
                continue
            found.append(diagnostic(
                'E008', 'DCT timex must have functionInDocument="CREATION_TIME"',
                doc.position(ref.key), [timex.tid],
            ))
    return found
