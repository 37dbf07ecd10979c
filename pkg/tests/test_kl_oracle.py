from math import comb

import numpy as np
import pytest

from algebra.finite_field import get_field
from algebra.pauli import multiply, parse_pauli
from codes.bacon_casaccino import construct_bc_hybrid, repetition_code
from codes.hybrid import inner_code_stabilizer, inner_distance
from codes.stabilizer import new_stabilizer
from config.qec_config import ORACLE_CAP_ENV, QecConfig
from conftest import random_pauli
from data.catalog import load_example
from oracle.kl_oracle import (CLASSICAL, QUANTUM, check_correction, check_detection, check_dimension,
                              check_subsystem_conditions, code_basis, pauli_matrix, projector)
from utils.errors import DimensionTooLarge


def test_single_qudit_matrices():
    assert np.allclose(pauli_matrix(parse_pauli("I", get_field(2))), np.eye(2))
    assert np.allclose(pauli_matrix(parse_pauli("Y", get_field(2))), [[0, -1j], [1j, 0]])
    w = np.exp(2j * np.pi / 3)
    assert np.allclose(pauli_matrix(parse_pauli("(0|1)", get_field(3))), np.diag([1, w, w ** 2]))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_matrix_of_product(q, rng):
    spec = get_field(q)
    for _ in range(30):
        e1, e2 = random_pauli(rng, spec, 2), random_pauli(rng, spec, 2)
        assert np.allclose(pauli_matrix(multiply(e1, e2)), pauli_matrix(e1) @ pauli_matrix(e2), atol=1e-12)


def test_hermitian_letters():
    for text in ["YY", "-XYZ", "ZIY"]:
        m = pauli_matrix(parse_pauli(text, get_field(2)))
        assert np.allclose(m, m.conj().T)


def test_projector_of_empty_stabilizer():
    s = new_stabilizer([], n=2, spec=get_field(3))
    assert np.allclose(projector(s), np.eye(9))


def test_shaw6_projectors(shaw6):
    p0 = projector(inner_code_stabilizer(shaw6, [0]))
    p1 = projector(inner_code_stabilizer(shaw6, [1]))
    for p in (p0, p1):
        assert abs(np.trace(p) - 2) < 1e-9
        assert np.abs(p @ p - p).max() < 1e-9
        assert np.abs(p - p.conj().T).max() < 1e-9
    assert np.abs(p0 @ p1).max() < 1e-9


def test_code_basis_is_orthonormal(five_qubit):
    basis = code_basis(five_qubit)
    assert basis.shape == (32, 2)
    assert np.allclose(basis.conj().T @ basis, np.eye(2))
    assert np.allclose(projector(five_qubit) @ basis, basis)


def test_shaw6_detection(shaw6):
    assert check_detection(shaw6, 3, 2).passed
    assert check_subsystem_conditions(shaw6, 3, 2).passed
    quantum = check_detection(shaw6, 4, 2)
    assert not quantum.passed
    assert quantum.min_weight(QUANTUM) == 3
    classical = check_detection(shaw6, 3, 3)
    assert not classical.passed
    assert classical.min_weight(CLASSICAL) == 2
    assert classical.min_weight(QUANTUM) is None
    assert any(v.operator.support == (3, 5) for v in classical.violations)


def test_shaw6_correction(shaw6):
    report = check_correction(shaw6, 3, 2)
    assert report.passed
    assert (report.d, report.c) == (3, 2)


def test_shaw6_correction_beyond_distance(shaw6):
    quantum = check_correction(shaw6, 5, 2)
    assert not quantum.passed
    assert quantum.min_weight(QUANTUM) == inner_distance(shaw6).weight == 3
    classical = check_correction(shaw6, 3, 4)
    assert not classical.passed
    assert (classical.d, classical.c) == (3, 4)
    assert classical.min_weight(CLASSICAL) == 2


def test_small_bacon_shor():
    rep = repetition_code(2)
    h, _ = construct_bc_hybrid(rep, rep)
    assert check_subsystem_conditions(h, 2, 2).passed
    assert not check_detection(h, 3, 2).passed


@pytest.mark.slow
def test_gottesman9x_detection(gottesman9x):
    assert check_detection(gottesman9x, 3, 3).passed
    assert check_detection(gottesman9x, 4, 3).min_weight(QUANTUM) == 3
    assert check_detection(gottesman9x, 3, 4).min_weight(CLASSICAL) == 3


@pytest.mark.slow
def test_bacon_shor_hybrid_detection():
    h = load_example("baconshor9").to_hybrid()
    assert check_subsystem_conditions(h, 3, 2).passed
    assert check_detection(h, 4, 2).min_weight(QUANTUM) == 3
    assert check_detection(h, 3, 3).min_weight(CLASSICAL) == 2


def test_dimension_cap(monkeypatch):
    monkeypatch.delenv(ORACLE_CAP_ENV, raising=False)
    h = load_example("toric18").to_hybrid()
    with pytest.raises(DimensionTooLarge) as info:
        check_detection(h, 3, 2)
    assert info.value.dim == 2 ** 18


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(ORACLE_CAP_ENV, "64")
    config = QecConfig()
    assert config.oracle_cap == 64
    with pytest.raises(DimensionTooLarge):
        check_dimension(get_field(2), 7, config)
    monkeypatch.setenv(ORACLE_CAP_ENV, "lots")
    with pytest.raises(ValueError):
        QecConfig()


def test_warning_above_warn_dim():
    config = QecConfig().update(oracle_warn_dim=16)
    with pytest.warns(RuntimeWarning):
        check_dimension(get_field(2), 5, config)


@pytest.mark.slow
def test_grassl12_correction(monkeypatch):
    monkeypatch.setenv(ORACLE_CAP_ENV, "4096")
    h = load_example("grassl12").to_hybrid()
    with pytest.warns(RuntimeWarning):
        report = check_correction(h, 5, 4)
    assert report.passed
    assert report.checked == sum(comb(12, w) * 3 ** w for w in range(5))
