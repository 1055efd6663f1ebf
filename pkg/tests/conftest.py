import pytest

from outerbook.generators import gen_family
from outerbook.graph import Graph

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        number, title = marker
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")


def cycle(n: int) -> Graph:
    return gen_family("cycle", n)


@pytest.fixture
def diamond() -> Graph:
    return gen_family("diamond")


@pytest.fixture
def bowtie() -> Graph:
    return gen_family("bowtie")


@pytest.fixture
def c6_two_chords() -> Graph:
    return Graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (3, 5)])


# C8 + chords where a maximum-degree residual vertex is not a cut vertex
CUT_VERTEX_COUNTEREXAMPLE = Graph(
    8, [(i, (i + 1) % 8) for i in range(8)] + [(1, 7), (2, 6), (2, 7), (3, 5), (3, 6)]
)
