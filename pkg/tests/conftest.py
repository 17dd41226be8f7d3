import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from abjadkit import grammars as G  # noqa: E402

# criterion number -> (passed, detail); filled in by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def grammars():
    return G.default_grammars()


@pytest.fixture(scope="session")
def archive_dir(tmp_path_factory, grammars):
    from abjadkit import cli

    out = tmp_path_factory.mktemp("grammars")
    assert cli.main(["build", "--out", str(out)]) == 0
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
