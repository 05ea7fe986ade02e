import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def record():
    """Store one summary line per acceptance criterion, printed after the run."""

    def _record(number: int, title: str, ok: bool, detail: str) -> None:
        word = "PASS" if ok else "FAIL"
        line = f"criterion {number:>2} {word}  {title}: {detail}"
        _ACCEPTANCE[number] = line
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
