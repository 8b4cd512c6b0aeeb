import pytest

_LINES: dict[str, str] = {}


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion for the end-of-run summary."""

    def record(cid: str, ok: bool, detail: str) -> None:
        _LINES[cid] = f"{cid} {'PASS' if ok else 'FAIL'}  {detail}"
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_LINES, key=lambda c: int(c[1:])):
        terminalreporter.write_line(_LINES[cid])
