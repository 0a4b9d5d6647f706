import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(RESULTS.items(), key=lambda kv: int(kv[0].split(".")[0])):
        terminalreporter.write_line(f"{status}  {label}")
