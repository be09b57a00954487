from pathlib import Path

import pytest

from mbuw import Sample, load_sample

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# reference values for the two bundled datasets (descriptive statistics and
# the recorded fit parameters the goodness-of-fit columns were computed at)
FLOOD_RECORDED_THETA = 1.0474 ** 2.5501
PUMPS_RECORDED_THETA = 3.7002 ** 0.741


@pytest.fixture(scope="session")
def flood() -> Sample:
    return load_sample(FIXTURES / "flood.txt")


@pytest.fixture(scope="session")
def pumps() -> Sample:
    return load_sample(FIXTURES / "pumps.txt")
