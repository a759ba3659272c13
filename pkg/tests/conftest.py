import pytest

from ramanujan_primes import build_table, compute_ramanujan
from ramanujan_primes.ramanujan import ramanujan_count_covering

ACCEPTANCE_LINES: list[str] = []


def trial_division_is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@pytest.fixture(scope="session")
def table_1e6():
    return build_table(10**6)


@pytest.fixture(scope="session")
def rt_500():
    return compute_ramanujan(500)


@pytest.fixture(scope="session")
def rt_10k():
    return compute_ramanujan(10**4)


@pytest.fixture(scope="session")
def rt_cover_1e5(table_1e6):
    return compute_ramanujan(ramanujan_count_covering(table_1e6, 10**5), table=table_1e6)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, text = marker.args
    status = "PASS" if report.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {text}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
