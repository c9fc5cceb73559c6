import itertools

import pytest

from hausdorff import build_space, from_points_euclidean
from hausdorff.metric import PointSet


@pytest.fixture
def triangle():
    """Three points at pairwise distance 1."""
    return build_space(["p", "q", "r"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])


@pytest.fixture
def pair():
    return build_space(["p", "q"], [[0, 1], [1, 0]])


@pytest.fixture
def line4():
    return from_points_euclidean([0.0, 1.0, 3.0, 7.0], ["a", "b", "c", "d"])


def all_subsets(space):
    for r in range(space.n + 1):
        for idx in itertools.combinations(range(space.n), r):
            yield PointSet(space, idx)


# one summary line per numbered acceptance criterion

_criteria: dict[str, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(item.nodeid, {"number": number, "title": title, "ok": True, "secs": 0.0})
    entry["secs"] += rep.duration
    if rep.failed or rep.skipped:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for e in sorted(_criteria.values(), key=lambda e: e["number"]):
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {e['number']:>2}: {e['title']} ({e['secs']:.1f} s)")
