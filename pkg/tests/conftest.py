import random
import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

# one line per acceptance criterion, printed after the run
_CRITERIA: list[str] = []


@pytest.fixture
def rng():
    return random.Random(20240611)


class _Record:
    detail = ""


@pytest.fixture
def criterion():
    """``with criterion("3", "exact identities", limit=10) as rec:``

    Records PASS when the block finishes without error (and within ``limit``
    seconds, if given), FAIL otherwise.
    """

    @contextmanager
    def track(num: str, title: str, limit: float | None = None):
        rec = _Record()
        t0 = time.perf_counter()
        ok = False
        try:
            yield rec
            elapsed = time.perf_counter() - t0
            if limit is not None:
                assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            line = f"criterion {num} [{'PASS' if ok else 'FAIL'}] {title} ({elapsed:.2f}s)"
            if rec.detail:
                line += f": {rec.detail}"
            print(line)
            _CRITERIA.append(line)

    return track


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: s.split()[1]):
            terminalreporter.write_line(line)
