import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from divgraph.harness import DEFAULT_CORPUS  # noqa: E402
from divgraph.rings import build_ring  # noqa: E402
from oracles import Oracle  # noqa: E402


@lru_cache(maxsize=None)
def ring(spec):
    return build_ring(spec)


@lru_cache(maxsize=None)
def oracle(spec):
    return Oracle(ring(spec))


CORPUS = list(DEFAULT_CORPUS)
SMALL = [s for s in CORPUS if ring(s).size <= 16]


@pytest.fixture
def R():
    return ring


# criterion number -> (passed, one-line detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
