import random

import pytest

from ribbontutte import fixtures
from ribbontutte.packaged import PackagedRibbonGraph

# acceptance results, filled in by tests marked with ``criterion``
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n, title = mark.args
    prev = _CRITERIA.get(n, (title, True))
    _CRITERIA[n] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def interlaced_pg():
    return PackagedRibbonGraph.from_plain(fixtures.interlaced())


def random_corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [fixtures.random_packaged(rng, **kw) for _ in range(count)]
