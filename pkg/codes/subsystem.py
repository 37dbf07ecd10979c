import functools
import logging
from fractions import Fraction
from typing import List, Tuple

from algebra.pauli import PauliOperator, pairing
from algebra.symplectic import PauliSpan, centralizer_basis, symplectic_pairs
from codes.search import SearchResult, min_weight_search
from codes.stabilizer import LogicalBasis, StabilizerGroup, new_stabilizer
from utils.errors import GaugeNotInCentralizer, GaugePairRelationViolated

logger = logging.getLogger(__name__)


class SubsystemCode(object):
    def __init__(self, stabilizer: StabilizerGroup, gauge_pairs: List[Tuple[PauliOperator, PauliOperator]]):
        """
        :param stabilizer: the group S
        :param gauge_pairs: (G^X_i, G^Z_i) pairs, l*r of them
        """
        self.stabilizer = stabilizer
        self.gauge_pairs = list(gauge_pairs)
        self.n = stabilizer.n
        self.spec = stabilizer.spec

    @property
    def gauge_x(self):
        return [gx for gx, _ in self.gauge_pairs]

    @property
    def gauge_z(self):
        return [gz for _, gz in self.gauge_pairs]

    @functools.cached_property
    def gauge_group(self) -> PauliSpan:
        ops = list(self.stabilizer.generators) + self.gauge_x + self.gauge_z
        return PauliSpan(ops, n=self.n, spec=self.spec)

    @functools.cached_property
    def bare_logicals(self) -> PauliSpan:
        """N(G), the operators commuting with the whole gauge group."""
        return centralizer_basis(self.gauge_group)

    @property
    def r(self) -> Fraction:
        return Fraction(len(self.gauge_pairs), self.spec.ell)

    @property
    def k(self) -> Fraction:
        return Fraction(self.stabilizer.ell_k - len(self.gauge_pairs), self.spec.ell)

    def __repr__(self):
        return "SubsystemCode([[%d,%s,%s]] over %s)" % (self.n, self.k, self.r, self.spec)


def validate_subsystem(stab_gens, gauge_pairs, n=None, spec=None) -> SubsystemCode:
    stabilizer = new_stabilizer(stab_gens, n=n, spec=spec)
    gauge_pairs = list(gauge_pairs)
    for i, (gx, gz) in enumerate(gauge_pairs):
        for g in stabilizer.generators:
            if pairing(g, gx) or pairing(g, gz):
                raise GaugeNotInCentralizer(i)
    for i, (gx_i, gz_i) in enumerate(gauge_pairs):
        if not pairing(gx_i, gz_i):
            raise GaugePairRelationViolated(i, i, "G^X_%d and G^Z_%d commute" % (i, i))
        for j in range(i + 1, len(gauge_pairs)):
            gx_j, gz_j = gauge_pairs[j]
            if pairing(gx_i, gz_j) or pairing(gx_j, gz_i) or pairing(gx_i, gx_j) or pairing(gz_i, gz_j):
                raise GaugePairRelationViolated(i, j)
    code = SubsystemCode(stabilizer, gauge_pairs)
    centralizer = stabilizer.centralizer
    assert all(centralizer.member(g) for g in code.gauge_group.basis)
    assert code.gauge_group.rank == stabilizer.dim + 2 * len(gauge_pairs)
    logger.info("subsystem code [[%d,%s,%s]] over %s", code.n, code.k, code.r, code.spec)
    return code


def min_distance_subsystem(c: SubsystemCode, max_weight=None, config=None) -> SearchResult:
    """Lightest element of N(S) outside G."""
    return min_weight_search(c.n, c.spec, c.stabilizer.generators, c.bare_logicals.basis,
                             max_weight=max_weight, config=config)


def purity(c: SubsystemCode, config=None) -> SearchResult:
    """Lightest nonidentity element of G; weight is None when G is trivial."""
    if c.gauge_group.rank == 0:
        return SearchResult(None, None, c.n)
    checks = centralizer_basis(c.gauge_group).basis
    return min_weight_search(c.n, c.spec, checks, (), max_weight=c.n, config=config)


def quantum_logicals(c: SubsystemCode) -> LogicalBasis:
    pairs, _ = symplectic_pairs(c.bare_logicals.basis, center=c.stabilizer.span)
    expected = c.stabilizer.ell_k - len(c.gauge_pairs)
    assert len(pairs) == expected, "expected %d logical pairs, found %d" % (expected, len(pairs))
    return LogicalBasis(pairs)
