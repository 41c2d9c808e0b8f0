import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from netrank import karate_club


@pytest.fixture(scope="session")
def karate():
    return karate_club()
