import pytest

from semigroup_sep.core import CayleyTable
from semigroup_sep.enumeration import EnumerationConfig, enumerate_tables

LZ2 = CayleyTable(((0, 0), (1, 1)))
SL2 = CayleyTable(((0, 0), (0, 1)))
Z2 = CayleyTable(((0, 1), (1, 0)))
Z3 = CayleyTable(((0, 1, 2), (1, 2, 0), (2, 0, 1)))
TRIVIAL = CayleyTable(((0,),))
NULL3 = CayleyTable(((0, 0, 0), (0, 0, 0), (0, 0, 0)))

_CORPUS = {}


def labelled(n):
    if n not in _CORPUS:
        _CORPUS[n] = list(enumerate_tables(EnumerationConfig(n)))
    return _CORPUS[n]


def corpus_upto(max_order):
    return [s for n in range(1, max_order + 1) for s in labelled(n)]


@pytest.fixture(scope="session")
def corpus3():
    return corpus_upto(3)


@pytest.fixture(scope="session")
def corpus4():
    return corpus_upto(4)


# -- acceptance summary ------------------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): an acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "_acceptance", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, text = marker
        prev = _ACCEPTANCE.get((number, text), True)
        _ACCEPTANCE[(number, text)] = prev and report.outcome == "passed"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        rep._acceptance = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), ok in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
