from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from kummerlab import certify

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ctx() -> certify.Context:
    """Shared cache of surfaces, tropes and sheet lattices."""
    return certify.Context()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
