import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from algebra.pauli import PauliOperator, canonical, multiply, pairing, power, identity
from algebra.symplectic import PauliSpan, centralizer_basis, check_isotropic, symplectic_pairs
from utils.errors import InconsistentPhases, NotAbelian, ShapeError

logger = logging.getLogger(__name__)


def phase_tag(e: PauliOperator) -> int:
    """Tag t with e|psi> = |psi>  <=>  canonical(e)|psi> = w^{-t}|psi>."""
    if e.spec.p == 2:
        herm = e.hermitian_phase
        if herm % 2:
            return None
        return herm // 2
    return e.phase


def signed(e: PauliOperator, tag: int) -> PauliOperator:
    """The operator whose +1 eigenspace is the w^{-tag} eigenspace of canonical(e)."""
    base = canonical(e)
    if e.spec.p == 2:
        return base.with_phase(base.phase + 2 * (tag % 2))
    return base.with_phase(tag)


def label_trace(label, message, spec) -> int:
    """Tr(b . a) for b, a in F_q^m."""
    table = spec.trace_mul_table
    return int(sum(table[b, a] for b, a in zip(label, message))) % spec.p


class StabilizerGroup(object):
    def __init__(self, span: PauliSpan, phases: Sequence[int], classical: Sequence[int] = (), labels=()):
        """
        :param span: phase-stripped group, its basis are the generators
        :param phases: tag per generator, generator g is imposed with eigenvalue w^{-tag}
        :param classical: positions of the classical generators inside the basis
        :param labels: logical-Z vector b_i in F_q^m per classical generator
        """
        self.span = span
        self.n = span.n
        self.spec = span.spec
        self.generators: List[PauliOperator] = [canonical(g) for g in span.basis]
        self.phases: Tuple[int, ...] = tuple(int(t) % self.spec.p for t in phases)
        self.classical: Tuple[int, ...] = tuple(classical)
        self.labels = tuple(tuple(int(v) for v in b) for b in labels)
        if len(self.phases) != len(self.generators):
            raise ShapeError("%d phase tags for %d generators" % (len(self.phases), len(self.generators)))
        if self.labels and len(self.labels) != len(self.classical):
            raise ShapeError("%d labels for %d classical generators" % (len(self.labels), len(self.classical)))

    @property
    def dim(self) -> int:
        return self.span.rank

    @property
    def ell_k(self) -> int:
        """k in units of F_p dimensions, ell * n - dim."""
        return self.spec.ell * self.n - self.dim

    @property
    def k(self) -> Fraction:
        return Fraction(self.ell_k, self.spec.ell)

    @property
    def m(self) -> int:
        return len(self.labels[0]) if self.labels else 0

    @functools.cached_property
    def centralizer(self) -> PauliSpan:
        return centralizer_basis(self.span)

    def signed_generators(self) -> List[PauliOperator]:
        return [signed(g, t) for g, t in zip(self.generators, self.phases)]

    def quantum_generators(self) -> List[PauliOperator]:
        return [g for i, g in enumerate(self.generators) if i not in self.classical]

    def eigenvalue_exponent(self, i: int) -> int:
        return (-self.phases[i]) % self.spec.p

    def element(self, coeffs) -> PauliOperator:
        """The signed group element prod g_i^{coeffs[i]}, the operator fixing the code space."""
        return _signed_product(self.signed_generators(), coeffs, self.n, self.spec)

    def __repr__(self):
        return "StabilizerGroup(n=%d, %s, dim=%d, k=%s)" % (self.n, self.spec, self.dim, self.k)


def _signed_product(gens, coeffs, n, spec):
    result = identity(n, spec)
    for g, c in zip(gens, coeffs):
        c = int(c) % spec.p
        if c:
            result = multiply(result, power(g, c))
    return result


def new_stabilizer(gens: Sequence[PauliOperator], n=None, spec=None, classical_from: int = None) -> StabilizerGroup:
    """
    :param gens: operators whose joint +1 eigenspace is the code, phases included
    :param classical_from: generators from this position on are the classical generators
    """
    gens = list(gens)
    span = PauliSpan(gens, n=n, spec=spec)
    n, spec = span.n, span.spec
    bad = check_isotropic(gens)
    if bad is not None:
        raise NotAbelian(*bad)
    tags = []
    for i, g in enumerate(gens):
        tag = phase_tag(g)
        if tag is None:
            raise InconsistentPhases("generator %d squares to -I and cannot stabilize a state" % i)
        tags.append(tag)
    basis_tags = [tags[i] for i in span.basis_index]
    signed_basis = [signed(g, t) for g, t in zip(span.basis, basis_tags)]
    chosen = set(span.basis_index)
    for i, g in enumerate(gens):
        if i in chosen:
            continue
        _, coeffs = span.member(g, coefficients=True)
        expected = _signed_product(signed_basis, coeffs, n, spec)
        if expected.phase != signed(g, tags[i]).phase:
            raise InconsistentPhases("generator %d is a product of earlier generators with a different phase" % i)
    classical = ()
    if classical_from is not None:
        classical = tuple(pos for pos, i in enumerate(span.basis_index) if i >= classical_from)
    group = StabilizerGroup(span, basis_tags, classical=classical)
    assert group.centralizer.rank + group.dim == 2 * spec.ell * n
    logger.debug("stabilizer on %d qudits over %s: %d of %d generators independent, k = %s",
                 n, spec, group.dim, len(gens), group.k)
    return group


@dataclass
class LogicalBasis:
    pairs: List[Tuple[PauliOperator, PauliOperator]] = field(default_factory=list)

    def __len__(self):
        return len(self.pairs)

    def operators(self) -> List[PauliOperator]:
        return [op for pair in self.pairs for op in pair]

    def check(self, stabilizer: StabilizerGroup = None) -> bool:
        for i, (xi, zi) in enumerate(self.pairs):
            for j, (xj, zj) in enumerate(self.pairs):
                if (pairing(xi, zj) != 0) != (i == j):
                    return False
                if i != j and (pairing(xi, xj) or pairing(zi, zj)):
                    return False
            if stabilizer is not None:
                for g in stabilizer.generators:
                    if pairing(g, xi) or pairing(g, zi):
                        return False
        return True


def logical_operators(s: StabilizerGroup) -> LogicalBasis:
    pairs, _ = symplectic_pairs(s.centralizer.basis, center=s.span)
    assert len(pairs) == s.ell_k, "expected %d logical pairs, found %d" % (s.ell_k, len(pairs))
    return LogicalBasis(pairs)


def apply_phase_tags(s: StabilizerGroup, message) -> StabilizerGroup:
    """Add -Tr(b_i . a) to the tag of every classical generator g_i."""
    message = [int(a) for a in message]
    if len(message) != s.m:
        raise ShapeError("message of length %d for a code with m = %d" % (len(message), s.m))
    phases = list(s.phases)
    for pos, label in zip(s.classical, s.labels):
        phases[pos] = (phases[pos] - label_trace(label, message, s.spec)) % s.spec.p
    return StabilizerGroup(s.span, phases, classical=s.classical, labels=s.labels)
