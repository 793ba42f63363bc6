from itertools import combinations_with_replacement

import pytest

from veronese_hilbert import make_veronese

ACCEPTANCE_LINES = []


def admissible_grid(max_n=5, max_d=5):
    """Every admissible sorted cap vector with n <= max_n, d <= max_d."""
    out = []
    for d in range(1, max_d + 1):
        for n in range(2, max_n + 1):
            for caps in combinations_with_replacement(range(1, d + 1), n):
                if sum(caps) > d:
                    out.append(make_veronese(caps, d))
    return out


@pytest.fixture(scope="session")
def grid():
    return admissible_grid()


WORKED = {
    "V(2,2,2;2)": ((2, 2, 2), 2),
    "V(1,1,2;2)": ((1, 1, 2), 2),
    "V(1,1,1,1;2)": ((1, 1, 1, 1), 2),
}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
