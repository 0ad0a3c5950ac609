import numpy as np
import pytest

from pointsets import ACCEPTANCE_LINES


@pytest.fixture
def rng():
    return np.random.default_rng(20051204)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
