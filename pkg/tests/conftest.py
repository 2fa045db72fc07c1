import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("ci", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture(scope="session")
def S4():
    from carter_kit.recognize import symmetric
    return symmetric(4)


@pytest.fixture(scope="session")
def psigma27():
    from carter_kit.recognize import psigma_l2
    return psigma_l2(3, 3)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance(capsys):
    """Record and print one summary line for an acceptance criterion."""
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}"
        _ACCEPTANCE.append(line)
        with capsys.disabled():
            print("\n" + line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip("]"))):
            terminalreporter.write_line(line)
