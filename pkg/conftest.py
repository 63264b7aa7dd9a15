import os
import shutil

import pytest

from src.lib.utils.config import FIXTURE_DIR
from src.lib.utils.logger import clear_current_file


@pytest.fixture
def fixture_copy(tmp_path):
    """A writable copy of the fixture corpus."""
    target = tmp_path / 'corpus'
    shutil.copytree(FIXTURE_DIR, target)
    yield target


@pytest.fixture
def copy_fixture(tmp_path):
    def copy(name: str):
        target = tmp_path / f'{name}.tml'
        shutil.copyfile(os.path.join(FIXTURE_DIR, f'{name}.tml'), target)
        return target
    return copy


@pytest.fixture(autouse=True)
def clean_up():
    yield
    clear_current_file()


def pytest_collection_modifyitems(config, items):
    only_items = [item for item in items if "only" in item.keywords]
    if only_items:
        items[:] = only_items
