from importlib.resources import files

import pytest

from permtab import tableaux_of_length

ACCEPTANCE: dict[str, str] = {}


def figure_text(name: str) -> str:
    return (files("permtab") / "data" / name).read_text()


@pytest.fixture(scope="session")
def figure():
    return figure_text


_CACHE: dict[int, list] = {}


def all_tableaux(n: int) -> list:
    if n not in _CACHE:
        _CACHE[n] = list(tableaux_of_length(n))
    return _CACHE[n]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.failed):
        ACCEPTANCE[label] = "PASS" if report.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE[label]}  criterion {label}")
