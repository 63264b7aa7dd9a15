from pathlib import Path

from src.lib.utils import config


def collect_paths(paths: list[str]) -> list[str]:
    """Expand directories into their *.tml and *.xml files, sorted lexicographically.

    Files given explicitly are kept in command-line order whatever their
    suffix; missing paths are kept too so they are reported, not skipped.
    """
    collected: list[str] = []
    for given in paths:
        path = Path(given)
        if path.is_dir():
            found = [p for p in path.rglob('*') if p.is_file() and p.suffix.lower() in config.INPUT_SUFFIXES]
            collected.extend(sorted(str(p) for p in found))
        else:
            collected.append(given)
    return collected
