import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from multiscale_bpa import Frame, MassFunction, build_mass_function  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

EXAMPLE2 = [("a", 0.2), ("b", 0.3), ("c", 0.1), ("ab", 0.1), ("abc", 0.3)]
EXAMPLE3 = [("a", 0.3), ("b", 0.1), ("ab", 0.1), ("ac", 0.2), ("abc", 0.3)]
CROSSING = [("b", 0.25), ("ac", 0.35), ("abc", 0.40)]

ABC = Frame(["a", "b", "c"])


def bpa(entries, frame=ABC, **kw):
    """Build from compact entries where "ab" means the subset {a, b}."""
    return build_mass_function(frame, [(tuple(key), v) for key, v in entries], **kw)


def to_mass_function(labels, focal) -> MassFunction:
    frame = Frame(labels)
    return MassFunction.from_masks(frame, {frame.mask(sorted(s)): v for s, v in focal.items()})


@pytest.fixture
def example2():
    return bpa(EXAMPLE2)


@pytest.fixture
def example3():
    return bpa(EXAMPLE3)


@pytest.fixture
def crossing():
    return bpa(CROSSING)


# Acceptance criteria report -------------------------------------------------

_acceptance: list[tuple[str, bool]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    _acceptance.append((marker.args[0], report.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by a test")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in _acceptance:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
