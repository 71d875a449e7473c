import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

import ndplan as nd
from corpus import DEMORGAN_SCRIPT

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def demorgan_state():
    return nd.run_script(DEMORGAN_SCRIPT)
