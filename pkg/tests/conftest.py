import itertools

import pytest

from arrcoh.arrangement import Arrangement
from arrcoh.density import ProjectiveClosure
from arrcoh.documents import load_corpus
from arrcoh.salvetti import SalvettiComplex


def arr(*rows):
    """Shorthand: ``arr(((1, 0), 0), ((0, 1), 1))``."""
    return Arrangement.from_rows(rows)


def all_signs(d):
    return list(itertools.product((1, -1), repeat=d))


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


class _Cache(dict):
    def __init__(self, factory):
        super().__init__()
        self.factory = factory

    def __missing__(self, key):
        value = self[key] = self.factory(key)
        return value


@pytest.fixture(scope="session")
def salvetti(corpus):
    return _Cache(lambda name: SalvettiComplex(corpus[name].arrangement))


@pytest.fixture(scope="session")
def closures(corpus):
    return _Cache(lambda name: ProjectiveClosure(corpus[name].arrangement))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(mod.RESULTS):
        status, detail = mod.RESULTS[name]
        terminalreporter.write_line(f"{status}  {name}  {detail}")
