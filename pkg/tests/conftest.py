import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

# Semantic checks enumerate whole environments, so single examples can be slow.
settings.register_profile("default", deadline=None)
settings.load_profile("default")

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Time a block against a limit and record one PASS/FAIL line for the summary."""
    lines = request.config.stash.setdefault(_LINES, [])

    @contextmanager
    def run(number: int, title: str, limit: float):
        note: dict = {"detail": ""}
        start = time.perf_counter()
        ok = False
        try:
            yield note
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = elapsed < limit
            verdict = "PASS" if ok and within else "FAIL"
            line = f"criterion {number} {verdict}: {title} ({elapsed:.2f} s, limit {limit:g} s) {note['detail']}".rstrip()
            lines.append(line)
            print(line)
        assert within, f"criterion {number} took {elapsed:.2f} s, limit {limit:g} s"

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
