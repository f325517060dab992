import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1][len("test_criterion_"):]
                num, _, label = name.partition("_")
                rows.append((int(num), "PASS" if outcome == "passed" else "FAIL", label))
    if rows:
        terminalreporter.section("acceptance criteria")
        for num, verdict, label in sorted(rows):
            terminalreporter.write_line(f"criterion {num}: {verdict}  {label.replace('_', ' ')}")


@pytest.fixture(scope="session")
def f5_tower():
    from mfd_forge import golden
    from mfd_forge.field import make_tower

    return make_tower(5, 1, 5, golden.F5_MODULUS)


@pytest.fixture(scope="session")
def f2_tower():
    from mfd_forge import golden
    from mfd_forge.field import make_tower

    return make_tower(2, 1, 8, golden.F2_MODULUS)
