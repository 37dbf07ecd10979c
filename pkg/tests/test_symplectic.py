import numpy as np
import pytest

from algebra.finite_field import get_field
from algebra.pauli import canonical, pairing, parse_pauli
from algebra.symplectic import (PauliSpan, centralizer_basis, check_isotropic, check_matrix, expand, from_vector,
                                solve_pairings, symplectic_form, symplectic_pairs)
from conftest import FIVE_QUBIT, paulis, random_pauli
from utils.errors import ShapeError


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_form_matches_pairing(q, rng):
    spec = get_field(q)
    omega = symplectic_form(spec, 3).view(np.ndarray).astype(np.int64)
    for _ in range(100):
        e1, e2 = random_pauli(rng, spec, 3), random_pauli(rng, spec, 3)
        assert (expand(e1) @ omega @ expand(e2)) % spec.p == pairing(e1, e2)
        assert from_vector(expand(e1), spec, 3) == canonical(e1)


@pytest.mark.parametrize("q", [2, 4, 5])
def test_check_matrix(q, rng):
    spec = get_field(q)
    ops = [random_pauli(rng, spec, 4) for _ in range(5)]
    checks = check_matrix(ops, spec, 4)
    for _ in range(20):
        e = random_pauli(rng, spec, 4)
        assert list((expand(e) @ checks.T) % spec.p) == [pairing(e, op) for op in ops]


def test_span_membership():
    x, z, y = paulis(["X", "Z", "Y"])
    span = PauliSpan([x, z, y])
    assert span.rank == 2
    assert span.basis_index == [0, 1]
    inside, coeffs = span.member(y, coefficients=True)
    assert inside
    assert list(coeffs) == [1, 1]
    assert x in span
    assert len(span) == 2


def test_span_coefficients_reconstruct(rng):
    spec = get_field(3)
    ops = [random_pauli(rng, spec, 3) for _ in range(3)]
    span = PauliSpan(ops)
    for _ in range(20):
        c = rng.integers(3, size=3)
        target = sum(int(ci) * expand(op) for ci, op in zip(c, ops)) % 3
        e = from_vector(target, spec, 3)
        inside, coeffs = span.member(e, coefficients=True)
        assert inside
        rebuilt = sum(int(ci) * expand(op) for ci, op in zip(coeffs, span.basis)) % 3
        assert list(rebuilt) == list(target)


def test_empty_span_needs_shape():
    with pytest.raises(ShapeError):
        PauliSpan([])
    span = PauliSpan([], n=2, spec=get_field(2))
    assert span.rank == 0
    assert centralizer_basis(span).rank == 4


def test_centralizer_dimension(rng):
    span = PauliSpan(paulis(FIVE_QUBIT))
    centralizer = centralizer_basis(span)
    assert centralizer.rank == 10 - 4
    for c in centralizer.basis:
        assert all(pairing(c, g) == 0 for g in span.basis)
    for q in [3, 4]:
        spec = get_field(q)
        span = PauliSpan([random_pauli(rng, spec, 3) for _ in range(2)])
        assert centralizer_basis(span).rank == 2 * spec.ell * 3 - span.rank


def test_solve_pairings():
    spec = get_field(2)
    ops = paulis(["ZI", "IZ"])
    v = solve_pairings(ops, [1, 0], spec, 2)
    assert [pairing(op, v) for op in ops] == [1, 0]
    assert solve_pairings(paulis(["ZI", "ZI"]), [1, 0], spec, 2) is None


def test_symplectic_pairs_normalized():
    spec = get_field(3)
    x, z = parse_pauli("(1|0)", spec), parse_pauli("(0|1)", spec)
    pairs, leftovers = symplectic_pairs([x, z])
    assert len(pairs) == 1 and not leftovers
    assert pairing(*pairs[0]) == 1


def test_symplectic_pairs_structure(rng):
    spec = get_field(4)
    ops = [random_pauli(rng, spec, 3) for _ in range(6)]
    pairs, leftovers = symplectic_pairs(ops)
    for i, (u, v) in enumerate(pairs):
        assert pairing(u, v) == 1
        for j, (u2, v2) in enumerate(pairs):
            if i != j:
                assert pairing(u, u2) == pairing(u, v2) == pairing(v, u2) == pairing(v, v2) == 0
        for w in leftovers:
            assert pairing(u, w) == pairing(v, w) == 0
    assert 2 * len(pairs) + PauliSpan(leftovers, n=3, spec=spec).rank == PauliSpan(ops).rank


def test_check_isotropic():
    assert check_isotropic(paulis(["XX", "ZZ"])) is None
    assert check_isotropic(paulis(["XI", "ZZ", "IX"])) == (0, 1)
