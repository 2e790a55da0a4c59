from __future__ import annotations

import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from distgraph import parse_text, word_to_graph  # noqa: E402

SPHERE = """\
dg 1
levels 2
level 1
vertex m
cycle c1 lower @m
level 2
vertex M
cycle c2 upper @M
pair c1 c2
"""


def two_saddle_torus(flip_tube: bool = False, upper: str = "a+ b-") -> str:
    """Height function on a torus: min, two figure-eight saddles, max.

    ``flip_tube`` glues the second tube with the opposite orientation.
    """
    return f"""\
dg 1
levels 4
level 1
vertex m
cycle c0 lower @m
level 2
vertex s
edge a s s
edge b s s
cycle u2 upper {upper}
cycle la lower a+
cycle lb lower b+
level 3
vertex t
edge c t t
edge d t t
cycle uc upper c+
cycle ud upper {'d-' if flip_tube else 'd+'}
cycle l3 lower c+ d-
level 4
vertex M
cycle u4 upper @M
pair c0 u2
pair la uc
pair lb ud
pair l3 u4
"""


@pytest.fixture
def sphere():
    return parse_text(SPHERE).graph


@pytest.fixture
def torus():
    return word_to_graph("acb")


@pytest.fixture
def rp2():
    return word_to_graph("ab-")


@pytest.fixture
def klein():
    return word_to_graph("ab-c-")


# -- acceptance reporting ------------------------------------------------------

_criteria: dict[int, list[bool]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria[marker.args[0]].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status} ({sum(results)}/{len(results)} checks passed)")
