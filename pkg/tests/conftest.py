import math

import pytest
from hypothesis import strategies as st

from landespin.geometry import make_direction

ACCEPTANCE_KEY = pytest.StashKey[list]()

thetas = st.one_of(
    st.floats(0.0, math.pi, allow_nan=False),
    st.sampled_from([0.0, math.pi]),
)
phis = st.floats(0.0, 2 * math.pi, allow_nan=False, exclude_max=True)
directions = st.builds(make_direction, thetas, phis)
projections = st.sampled_from([1, -1])


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE_KEY]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
