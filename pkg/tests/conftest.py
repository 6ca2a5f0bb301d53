import pytest

from rnsint import default_modulus_set, new_modulus_set

# 14 largest primes below 2^16; M ~ 2^224, wide enough for a_8 of the recurrence
WIDE_MODULI = (
    65371, 65381, 65393, 65407, 65413, 65419, 65423,
    65437, 65447, 65449, 65479, 65497, 65519, 65521,
)


@pytest.fixture(scope="session")
def z84():
    return new_modulus_set([12, 7])


@pytest.fixture(scope="session")
def fact_set():
    return new_modulus_set([13, 11, 9, 7])


@pytest.fixture(scope="session")
def default_set():
    return default_modulus_set()


@pytest.fixture(scope="session")
def wide_set():
    return new_modulus_set(WIDE_MODULI)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
