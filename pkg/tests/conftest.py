from __future__ import annotations

import pytest

from blancert.certifier import certify_base, certify_step, composed_quadruples


@pytest.fixture(scope="session")
def quadruples():
    return composed_quadruples(generic=True)


@pytest.fixture(scope="session")
def step_certificate(quadruples):
    return certify_step(generic=True, quadruples=quadruples)


@pytest.fixture(scope="session")
def base_certificate():
    return certify_base()


@pytest.fixture(scope="session")
def full_reports(tmp_path_factory):
    """The assembled report run twice, with one and with three threads."""
    from blancert.cli import main

    out = tmp_path_factory.mktemp("report")
    codes, texts = [], []
    for threads in (1, 3):
        path = out / f"report_{threads}.json"
        codes.append(main(["report", "--threads", str(threads), "--out", str(path)]))
        texts.append(path.read_bytes())
    return codes, texts


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
