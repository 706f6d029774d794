import pytest

from noma_secrecy.channel import SystemConfig

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def paper_config():
    """Default evaluation setup: d1=50 m, d2=100 m, -90 dBm noise, 70 dB transmit SNR."""
    return SystemConfig()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
