import random

import pytest
from hypothesis import settings, strategies as st

from gemdual.generators import corpus, random_rotation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = marker.args
        _ACCEPTANCE.append((f"C{number}", title, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for tag, title, status in sorted(_ACCEPTANCE, key=lambda r: int(r[0][1:])):
        terminalreporter.write_line(f"{status} {tag} {title}")


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(max_edges=9)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()


@st.composite
def rotations(draw, max_vertices=5, max_edges=7, orientable=None):
    nv = draw(st.integers(1, max_vertices))
    ne = draw(st.integers(max(nv - 1, 1), max(max_edges, nv - 1)))
    seed = draw(st.integers(0, 2**32 - 1))
    orient = draw(st.booleans()) if orientable is None else orientable
    return random_rotation(nv, ne, random.Random(seed), orientable=orient)
