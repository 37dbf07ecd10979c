import pytest

from algebra.finite_field import get_field
from algebra.pauli import format_pauli, pairing, parse_pauli
from codes.stabilizer import apply_phase_tags, logical_operators, new_stabilizer, phase_tag, signed
from conftest import paulis
from utils.errors import InconsistentPhases, NotAbelian, ShapeError


def test_five_qubit_code(five_qubit):
    assert five_qubit.dim == 4
    assert five_qubit.k == 1
    assert five_qubit.centralizer.rank == 6
    logicals = logical_operators(five_qubit)
    assert len(logicals) == 1
    assert logicals.check(five_qubit)


def test_not_abelian():
    with pytest.raises(NotAbelian) as info:
        new_stabilizer(paulis(["XX", "ZI"]))
    assert (info.value.i, info.value.j) == (0, 1)


@pytest.mark.parametrize("rows", [["iX"], ["Z", "-Z"], ["XX", "ZZ", "YY"]])
def test_inconsistent_phases(rows):
    with pytest.raises(InconsistentPhases):
        new_stabilizer(paulis(rows))


def test_dependent_generators_with_matching_phase():
    s = new_stabilizer(paulis(["XX", "ZZ", "-YY", "ZZ"]))
    assert s.dim == 2
    assert s.k == 0


def test_phase_tags():
    spec = get_field(3)
    assert phase_tag(parse_pauli("-Z", get_field(2))) == 1
    assert phase_tag(parse_pauli("iZ", get_field(2))) is None
    assert phase_tag(parse_pauli("w^2 (0|1)", spec)) == 2
    assert format_pauli(signed(parse_pauli("Z", get_field(2)), 1)) == "-Z"
    assert format_pauli(signed(parse_pauli("(0|1)", spec), 2)) == "w^2 (0|1)"


def test_signed_generators_keep_signs():
    s = new_stabilizer(paulis(["-XXXX", "ZZZZ"]))
    assert [format_pauli(g) for g in s.signed_generators()] == ["-XXXX", "ZZZZ"]
    assert s.phases == (1, 0)
    assert s.eigenvalue_exponent(0) == 1


def test_element_is_signed_product():
    s = new_stabilizer(paulis(["-XX", "ZZ"]))
    assert format_pauli(s.element([1, 1])) == "YY"


def test_qutrit_code():
    spec = get_field(3)
    gens = [parse_pauli(r, spec) for r in ["(1|0) (1|0) (1|0)", "(0|1) (0|1) (0|1)"]]
    s = new_stabilizer(gens)
    assert s.dim == 2 and s.k == 1
    logicals = logical_operators(s)
    assert len(logicals) == 1
    x, z = logicals.pairs[0]
    assert pairing(x, z) == 1


def test_apply_phase_tags_shape(five_qubit):
    with pytest.raises(ShapeError):
        apply_phase_tags(five_qubit, [1])
