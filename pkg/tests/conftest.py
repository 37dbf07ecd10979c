import os
import sys

import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))

from algebra.finite_field import get_field  # noqa: E402
from algebra.pauli import PauliOperator, parse_pauli  # noqa: E402
from codes.stabilizer import new_stabilizer  # noqa: E402
from data.catalog import load_example  # noqa: E402

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long regressions on the larger examples, deselect with -m 'not slow'")


def paulis(rows, q=2):
    spec = get_field(q)
    return [parse_pauli(r, spec) for r in rows]


def random_pauli(rng, spec, n, with_phase=True):
    modulus = 4 if spec.p == 2 else spec.p
    phase = int(rng.integers(modulus)) if with_phase else 0
    return PauliOperator(spec, rng.integers(spec.q, size=n), rng.integers(spec.q, size=n), phase)


@pytest.fixture
def rng():
    return np.random.default_rng(20190611)


@pytest.fixture
def gf2():
    return get_field(2)


@pytest.fixture
def five_qubit():
    return new_stabilizer(paulis(FIVE_QUBIT))


@pytest.fixture(scope="session")
def shaw6():
    return load_example("shaw6").to_hybrid()


@pytest.fixture(scope="session")
def gottesman9x():
    return load_example("gottesman9x").to_hybrid()


@pytest.fixture(scope="session")
def baconshor9():
    return load_example("baconshor9").to_subsystem()
