import pytest

from uclab import make_algebra
from uclab.suites import paper_b3_ucs


@pytest.fixture(scope="session")
def b1():
    return make_algebra(["a"])


@pytest.fixture(scope="session")
def b2():
    return make_algebra(["a", "b"])


@pytest.fixture(scope="session")
def b3():
    return make_algebra(["a", "b", "c"])


@pytest.fixture(scope="session")
def b4():
    return make_algebra(["a", "b", "c", "d"])


@pytest.fixture(scope="session")
def named(b3):
    """Kmin, K_ab, K_ac, K_bc, K (all edges), K_abc (filled triangle), Kmax."""
    return paper_b3_ucs()


# acceptance criteria report one line each at the end of the run
_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, limit): acceptance criterion with a time limit in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        label, limit = mark.args
        _criteria.append((label, "PASS" if rep.passed else "FAIL", rep.duration, limit, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, verdict, took, limit, name in _criteria:
        terminalreporter.write_line(f"{verdict} criterion {label}: {name} ({took:.2f} s, limit {limit} s)")
