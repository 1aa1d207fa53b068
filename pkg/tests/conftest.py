import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from matchcover.families import c6_complement, complete, cycle, petersen, wheel  # noqa: E402
from matchcover.graph import Graph  # noqa: E402

# brute-force oracles are slow on dense inputs; wall-clock deadlines only add flakiness
settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def c6bar() -> Graph:
    return c6_complement()


@pytest.fixture
def pete() -> Graph:
    return petersen()


@pytest.fixture
def w6() -> Graph:
    return wheel(6)


_CRITERIA: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    report = outcome.get_result()
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    if report.failed:
        entry["ok"] = False
    if report.when == "call":
        entry["seconds"] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}  {verdict}  {e['title']} ({e['seconds']:.2f} s)")
