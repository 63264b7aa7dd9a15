from typing import Optional

from src.domains.repairs.apply_actions import apply_actions
from src.domains.repairs.plan_repairs import plan
from src.models.document import Document
from src.models.repair import RepairAction, RepairConfig


def repair(doc: Document, cfg: Optional[RepairConfig] = None) -> tuple[Document, list[RepairAction]]:
    """Turn a LENIENT-parsed document into a TimeML-strict one.

    The result is the action log of `plan` replayed over `doc`, so the log
    alone reproduces it. Raises IrreparableError like `plan`.
    """
    actions = plan(doc, cfg)
    return apply_actions(doc, actions), actions
