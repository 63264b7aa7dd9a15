"""Application configuration module.

Loads environment variables and provides centralized configuration
for the tmlstrict toolkit. A value that does not parse falls back to
its default.
"""
from pathlib import Path
from dotenv import load_dotenv
from enum import StrEnum
import os

load_dotenv()

class ENVIRONMENTS(StrEnum):
    """Enumeration of supported run environments.

    Members:
        DEVELOPMENT: Local development environment
        TESTING: Automated testing environment
        PRODUCTION: Installed command-line use
    """
    DEVELOPMENT = "DEVELOPMENT"
    TESTING = "TESTING"
    PRODUCTION = "PRODUCTION"


def env_int(name: str, default: int, minimum: int = 1) -> int:
    try:
        return max(minimum, int(os.getenv(name, default)))
    except ValueError:
        return default


def env_choice(name: str, default: str, choices) -> str:
    value = os.getenv(name, default).strip().upper()
    return value if value in choices else default


def env_flag(name: str, default: bool) -> bool:
    value = os.getenv(name, '').strip().lower()
    if value in ('1', 'true', 'yes', 'on'):
        return True
    if value in ('0', 'false', 'no', 'off'):
        return False
    return default


# Application settings
APP_NAME = os.getenv('APP_NAME', 'tmlstrict')
ENV = os.getenv('ENV', ENVIRONMENTS.DEVELOPMENT)

# Output settings
NO_COLOR = bool(os.getenv('TMLSTRICT_NO_COLOR', ''))
DOCTYPE = os.getenv('TMLSTRICT_DOCTYPE', '<!DOCTYPE TimeML SYSTEM "TimeML.dtd">')

# Logging settings
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
LOG_LEVEL = env_choice('TMLSTRICT_LOG_LEVEL', 'WARNING', LOG_LEVELS)
LOG_FILE = os.getenv('TMLSTRICT_LOG_FILE')

# Batch processing
WORKERS = env_int('TMLSTRICT_WORKERS', 4)
INPUT_SUFFIXES = ('.tml', '.xml')

# Repair defaults
DANGLING_POLICIES = ('DROP', 'KEEP_AND_FAIL')
DANGLING_POLICY = env_choice('TMLSTRICT_DANGLING_POLICY', 'DROP', DANGLING_POLICIES)
FOLD_SINGLE_INSTANCES = env_flag('TMLSTRICT_FOLD_SINGLE_INSTANCES', True)

# Base directory paths
BASE_DIR = Path(__file__).parent.parent.parent.parent.resolve()
FIXTURE_DIR = os.path.join(BASE_DIR, 'tests', 'fixtures')
