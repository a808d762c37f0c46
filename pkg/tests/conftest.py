import sys

import pytest

from activepassive.lexicon import builtin_lexicon, parse_lexicon_source
from oracle import MICRO_SOURCE


@pytest.fixture(scope="session")
def lex():
    return builtin_lexicon()


@pytest.fixture(scope="session")
def micro():
    return parse_lexicon_source(MICRO_SOURCE)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance and acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.REPORT:
            terminalreporter.write_line(line)
