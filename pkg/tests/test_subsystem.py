import pytest

from algebra.finite_field import get_field
from algebra.pauli import pairing
from codes.subsystem import min_distance_subsystem, purity, quantum_logicals, validate_subsystem
from conftest import paulis
from utils.errors import GaugeNotInCentralizer, GaugePairRelationViolated


def test_bacon_shor_parameters(baconshor9):
    assert baconshor9.n == 9
    assert baconshor9.k == 1
    assert baconshor9.r == 4
    assert baconshor9.gauge_group.rank == 4 + 8
    assert baconshor9.bare_logicals.rank == 18 - 12


def test_bacon_shor_distance_and_purity(baconshor9):
    d = min_distance_subsystem(baconshor9)
    assert d.exact and d.weight == 3
    p = purity(baconshor9)
    assert p.weight == 2


def test_quantum_logicals(baconshor9):
    logicals = quantum_logicals(baconshor9)
    assert len(logicals) == 1
    assert logicals.check(baconshor9.stabilizer)
    x, z = logicals.pairs[0]
    for g in baconshor9.gauge_group.basis:
        assert pairing(g, x) == 0 and pairing(g, z) == 0


def test_gauge_outside_centralizer():
    with pytest.raises(GaugeNotInCentralizer) as info:
        validate_subsystem(paulis(["ZZ"]), [tuple(paulis(["XI", "ZI"]))])
    assert info.value.i == 0


def test_gauge_pair_commutes():
    with pytest.raises(GaugePairRelationViolated):
        validate_subsystem([], [tuple(paulis(["XI", "XI"]))], n=2, spec=get_field(2))


def test_gauge_pairs_interfere():
    pairs = [tuple(paulis(["XI", "ZI"])), tuple(paulis(["XX", "IZ"]))]
    with pytest.raises(GaugePairRelationViolated) as info:
        validate_subsystem([], pairs, n=2, spec=get_field(2))
    assert (info.value.i, info.value.j) == (0, 1)


def test_trivial_gauge_group_purity():
    code = validate_subsystem([], [], n=2, spec=get_field(2))
    assert code.k == 2
    assert purity(code).weight is None
