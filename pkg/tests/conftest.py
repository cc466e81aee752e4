import pytest

from noble.algebra import validate_inverse_semigroup
from noble.oracle.corpus import brandt_b2, chain, generate_corpus, symmetric_table
from noble.oracle.groups import groups_of_order


# I_2 ids: 0 empty, 1 delta_1, 2 delta_2, 3 [1>2], 4 [2>1], 5 id, 6 swap
@pytest.fixture(scope="session")
def I2():
    return symmetric_table(2)


@pytest.fixture(scope="session")
def I3():
    return symmetric_table(3)


@pytest.fixture(scope="session")
def E3():
    return chain(3)


@pytest.fixture(scope="session")
def C2():
    return validate_inverse_semigroup([[0, 1], [1, 0]], name="C2")


@pytest.fixture(scope="session")
def S3():
    return next(G for G in groups_of_order(6) if any(G.table[a][b] != G.table[b][a] for a in range(6) for b in range(6)))


@pytest.fixture(scope="session")
def B2():
    return brandt_b2()


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            k = int(nodeid.split("test_criterion_")[1].split("_")[0])
            if rep.when == "call" or status != "passed":
                results[k] = ("PASS" if status == "passed" else "FAIL", rep.duration)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        status, dur = results[k]
        name, limit = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {status} ({dur:.2f}s, limit {limit}s) {name}")
