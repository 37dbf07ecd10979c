import itertools

import pytest

from algebra.finite_field import get_field
from algebra.pauli import PauliOperator, pairing, single, weight
from codes.search import SearchResult, WeightSearch, min_weight_search
from config.qec_config import QecConfig
from utils.enumeration import colex_supports, letter_pairs


def brute_force_distance(s):
    """Lightest element of N(S) outside S over all q^(2n) operators."""
    spec, n = s.spec, s.n
    best = None
    for x in itertools.product(range(spec.q), repeat=n):
        for z in itertools.product(range(spec.q), repeat=n):
            e = PauliOperator(spec, x, z, 0)
            if e.is_identity() or any(pairing(g, e) for g in s.generators):
                continue
            if s.span.member(e):
                continue
            w = weight(e)
            best = w if best is None else min(best, w)
    return best


def test_five_qubit_distance(five_qubit):
    result = min_weight_search(5, five_qubit.spec, five_qubit.generators, five_qubit.centralizer.basis)
    assert result.exact
    assert result.weight == 3
    assert weight(result.witness) == 3
    assert result.weight == brute_force_distance(five_qubit)


def test_lower_bound(five_qubit):
    result = min_weight_search(5, five_qubit.spec, five_qubit.generators, five_qubit.centralizer.basis,
                               max_weight=2)
    assert not result.exact
    assert result.bound == 3
    assert str(result) == "> 2"


def test_parallel_search_agrees(five_qubit):
    config = QecConfig().update(n_jobs=2, chunk_size=3)
    serial = min_weight_search(5, five_qubit.spec, five_qubit.generators, five_qubit.centralizer.basis)
    parallel = min_weight_search(5, five_qubit.spec, five_qubit.generators, five_qubit.centralizer.basis,
                                 config=config)
    assert parallel.weight == serial.weight
    assert parallel.witness == serial.witness


def test_no_nonzero_condition():
    spec = get_field(2)
    search = WeightSearch(3, spec, [])
    result = search.run(3)
    assert result.weight == 1
    assert result.witness.support == (0,)


def test_search_result_str():
    assert str(SearchResult(4, None, 6)) == "4"


def test_colex_order():
    assert colex_supports(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_letter_pairs(q):
    letters = letter_pairs(q)
    assert len(letters) == q * q - 1
    assert (0, 0) not in letters
    if q == 2:
        assert letters == [(1, 0), (0, 1), (1, 1)]


@pytest.mark.parametrize("block", [1, 5, 40])
def test_letter_blocks_keep_order(five_qubit, block):
    config = QecConfig().update(letter_block=block)
    blocked = min_weight_search(5, five_qubit.spec, five_qubit.generators, five_qubit.centralizer.basis,
                                config=config)
    default = min_weight_search(5, five_qubit.spec, five_qubit.generators, five_qubit.centralizer.basis)
    assert blocked.weight == default.weight
    assert blocked.witness == default.witness


def test_letter_blocks_bounded():
    spec = get_field(4)
    n = 3
    everything = [single(n, spec, j, a=v) for j in range(n) for v in (1, 2)]
    everything += [single(n, spec, j, b=v) for j in range(n) for v in (1, 2)]
    search = WeightSearch(n, spec, everything, config=QecConfig().update(letter_block=16))
    sizes = [block.shape[0] for _, block in search.letter_blocks((0, 1, 2))]
    assert max(sizes) <= 16
    assert sum(sizes) == 15 ** 3
    result = search.run(n)
    assert result.weight is None
    assert result.bound == n + 1
