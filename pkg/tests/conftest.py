import sys
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclic_mckay import make_group  # noqa: E402


def small_pairs(r_max, r_min=2):
    return [(r, a) for r in range(r_min, r_max + 1) for a in range(1, r) if gcd(r, a) == 1]


@pytest.fixture
def c73():
    return make_group(7, 3)


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion"):
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
