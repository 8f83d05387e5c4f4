import pytest

from pgsolve.game import Owner, build_game

E, O = Owner.EVEN, Owner.ODD


@pytest.fixture
def g1():
    return build_game([(E, 2, [1]), (E, 1, [0])])


@pytest.fixture
def g2():
    return build_game([(O, 1, [1]), (O, 1, [0])])


@pytest.fixture
def g3():
    return build_game([(E, 1, [1, 2]), (O, 2, [0]), (O, 3, [0])])


# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
