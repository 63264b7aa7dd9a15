from src.domains.repairs.workspace import Workspace
from src.models.document import Document
from src.models.repair import RepairAction


def apply_actions(doc: Document, actions: list[RepairAction]) -> Document:
    """Replay an action log over a document.

    ESCAPE_CHARS actions act on source bytes before parsing and carry no edits.
    """
    workspace = Workspace(doc)
    for action in actions:
        workspace.apply_action(action)
    return workspace.document()
