import datetime as dt
from pathlib import Path

import pytest

from acronym_miner.corpus import Article

DATA = Path(__file__).parent / "data"
SYNTHETIC = DATA / "synthetic"

_RESULTS = pytest.StashKey[list]()


def make_article(text, id="a1", language="en", date="2010-03-01", source="src", category="news"):
    return Article(id, language, dt.date.fromisoformat(date), source, category, text)


@pytest.fixture
def synthetic_dir():
    return SYNTHETIC


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def acceptance_log(request):
    """Record one line per acceptance criterion for the terminal summary."""
    results = request.config.stash[_RESULTS]

    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        results.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
