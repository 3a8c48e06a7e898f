import contextlib
import time

import pytest

# criterion number -> (passed, description, seconds)
ACCEPTANCE: dict[int, tuple[bool, str, float]] = {}


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def record(number: int, text: str):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            ACCEPTANCE[number] = (ok, text, elapsed)
            print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text} ({elapsed:.2f}s)")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, text, elapsed = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text} ({elapsed:.2f}s)")
