import pytest

from indexcoding.verify import run_sweep


@pytest.fixture(scope="session")
def full_records():
    """One complete sweep of every class up to five vertices, shared by all
    tests; two workers to exercise the parallel path."""
    return run_sweep(range(1, 6), jobs=2)


@pytest.fixture(scope="session")
def n5_records(full_records):
    return [r for r in full_records if r.n == 5]


@pytest.fixture(scope="session")
def gap_records(full_records):
    return [r for r in full_records if r.gap]
