import time
from pathlib import Path

import pytest
from hypothesis import settings

from sturmcert import cert

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"

# filled by test_acceptance.py; printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def golden_lines(name: str) -> list[str]:
    return [line.strip() for line in (GOLDEN / name).read_text().splitlines() if line.strip()]


@pytest.fixture(scope="session")
def suite():
    """Every lemma run once, with wall-clock seconds per lemma."""
    out = {}
    for name, fn in (
        ("lemma1", cert.run_lemma1),
        ("lemma7", cert.run_lemma7),
        ("lemma8", cert.run_lemma8),
        ("lemma11", lambda: [cert.run_lemma11()]),
    ):
        t0 = time.perf_counter()
        records = fn()
        out[name] = (records, time.perf_counter() - t0)
    return out


@pytest.fixture(scope="session")
def all_records(suite):
    return sorted((r for records, _ in suite.values() for r in records), key=lambda r: r.claim_id)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
