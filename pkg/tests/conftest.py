import pytest

from agdecode import Code, hermitian_curve, make_field

F4_MOD = [1, 1, 1]
F9_MOD = [2, 2, 1]  # x^2 - x - 1 over GF(3)
F16_MOD = [1, 1, 0, 0, 1]
F64_MOD = [1, 1, 0, 0, 0, 0, 1]


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2, F4_MOD)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 2, F9_MOD)


@pytest.fixture(scope="session")
def F16():
    return make_field(2, 4, F16_MOD)


@pytest.fixture(scope="session")
def alpha(F9):
    return lambda k: F9.pow(3, k)


def worked_example_points(F9):
    a = lambda k: F9.pow(3, k)  # noqa: E731
    return [
        (0, 0), (0, a(2)), (0, a(6)), (1, 2), (1, a(1)), (1, a(3)), (2, 2), (2, a(1)), (2, a(3)),
        (a(1), 1), (a(1), a(7)), (a(1), a(5)), (a(2), 2), (a(2), a(1)), (a(2), a(3)),
        (a(7), 1), (a(7), a(7)), (a(7), a(5)), (a(5), 1), (a(5), a(7)), (a(5), a(5)),
        (a(3), 1), (a(3), a(7)), (a(3), a(5)), (a(6), 2), (a(6), a(1)), (a(6), a(3)),
    ]


def worked_example_received(F9):
    a = lambda k: F9.pow(3, k)  # noqa: E731
    v = [0] * 27
    v[5], v[6], v[19], v[22], v[25] = a(2), 2, a(3), a(7), 2
    return v


@pytest.fixture(scope="session")
def herm3(F9):
    return hermitian_curve(F9)


@pytest.fixture(scope="session")
def worked_code(herm3, F9):
    return Code(herm3, 16, worked_example_points(F9))


@pytest.fixture(scope="session")
def worked_v(F9):
    return worked_example_received(F9)


@pytest.fixture(scope="session")
def herm2(F4):
    return hermitian_curve(F4)


@pytest.fixture(scope="session")
def herm4(F16):
    return hermitian_curve(F16)


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; its outcome is listed in the summary."""
    entry = {"name": request.node.name, "label": None, "passed": False}
    _ACCEPTANCE.append(entry)

    def label(text):
        entry["label"] = text
        return entry

    return label


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        for entry in _ACCEPTANCE:
            if entry["name"] == item.name:
                entry["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE:
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['label'] or entry['name']}")
