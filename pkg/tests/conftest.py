import contextlib
import warnings

import pytest

_LINES = pytest.StashKey[list]()


class Finding(Exception):
    """Raised inside a report-only criterion: recorded as FAIL, never fails the test."""


@pytest.fixture
def acceptance(request):
    """``with acceptance(3, "title") as note:`` records one PASS/FAIL line.

    The line is FAIL when the block raises; ``note(text)`` attaches detail.
    Raising :class:`Finding` records FAIL and emits a warning instead of failing.
    """
    lines = request.config.stash.setdefault(_LINES, [])

    @contextlib.contextmanager
    def criterion(number, title):
        details = []
        try:
            yield details.append
        except Finding as exc:
            details.append(str(exc))
            lines.append((number, "FAIL", title, "; ".join(details)))
            warnings.warn(f"criterion {number} finding: {exc}")
            return
        except BaseException:
            lines.append((number, "FAIL", title, "; ".join(details)))
            raise
        lines.append((number, "PASS", title, "; ".join(details)))

    criterion.Finding = Finding
    return criterion


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, title, detail in sorted(lines):
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}{suffix}")
