"""
Hybrid quantum-classical codes from gauge fixing.

A hybrid code keeps the quantum stabilizer S_Q, fixes classical generators g_i
into the inner stabilizer S0 = <S_Q, g_i> and moves between the q^m inner codes
with translation operators. The eigenvalue of g_i on t_a C0 is w^{Tr(b_i . a)}
with Tr(b_i . a) = pairing(g_i, t_a), which defines the labels b_i.
"""
import functools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from algebra.pauli import PauliOperator, canonical, identity, multiply, pairing, power
from algebra.symplectic import PauliSpan, centralizer_basis, solve_pairings, trace_form
from codes.search import SearchResult, min_weight_search
from codes.stabilizer import StabilizerGroup, apply_phase_tags, logical_operators, new_stabilizer
from codes.subsystem import SubsystemCode
from utils.errors import FixedSetNotCommuting, ParseError, QecError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HybridParams:
    n: int
    k: Fraction
    m: Fraction
    d: Optional[int]
    c: Optional[int]
    q: int = 2

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        object.__setattr__(self, "m", Fraction(self.m))
        if self.k < 0 or self.m < 0:
            raise ValueError("k and m must be nonnegative, got k=%s m=%s" % (self.k, self.m))

    @classmethod
    def parse(cls, text: str, q: int = None) -> "HybridParams":
        """
        :param text: "[[n,k:m,d:c]]_q"; ":c" defaults to d, "_q" to q or 2
        """
        match = re.match(r"^\s*\[\[\s*(\d+)\s*,\s*([\d/]+)\s*:\s*([\d/]+)\s*,\s*(\d+)\s*(?::\s*(\d+)\s*)?\]\](?:_(\d+))?\s*$",
                         text)
        if match is None:
            raise ParseError("malformed parameters %r, expected [[n,k:m,d:c]]_q" % text, column=1)
        n, k, m, d, c, field_q = match.groups()
        try:
            k, m = Fraction(k), Fraction(m)
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad rational in %r" % text, column=1)
        d = int(d)
        c = int(c) if c is not None else d
        if field_q is not None:
            q = int(field_q)
        return cls(int(n), k, m, d, c, q if q is not None else 2)

    def __str__(self):
        d = "?" if self.d is None else str(self.d)
        c = "?" if self.c is None else str(self.c)
        return "[[%d,%s:%s,%s:%s]]_%d" % (self.n, self.k, self.m, d, c, self.q)


@dataclass
class ErrorDecomposition:
    quantum_stabilizer: np.ndarray
    classical_stabilizer: np.ndarray
    quantum_logical: np.ndarray
    translation: np.ndarray
    pure_error: np.ndarray

    @property
    def kind(self) -> str:
        if self.pure_error.any():
            return "detected"
        if self.translation.any():
            return "classical"
        if self.quantum_logical.any():
            return "quantum"
        return "harmless"


class HybridCode(object):
    def __init__(self, quantum: StabilizerGroup, classical_gens: List[PauliOperator],
                 translations: List[PauliOperator] = None):
        """
        :param quantum: S_Q with its phase tags
        :param classical_gens: g_i of S_C, l*m of them
        :param translations: t_(j,s) = X_j(alpha^s) at position j*l + s, derived when None
        """
        self.quantum = quantum
        self.n = quantum.n
        self.spec = quantum.spec
        ell = self.spec.ell
        self.classical_gens = list(classical_gens)
        if len(self.classical_gens) % ell:
            raise NotImplementedError("%d classical generators over %s give a non-integral m"
                                      % (len(self.classical_gens), self.spec))
        if translations is None:
            translations = minimal_translations(quantum, self.classical_gens)
        self.translations = [canonical(t) for t in translations]
        if len(self.translations) != len(self.classical_gens):
            raise ShapeError("%d translations for %d classical generators"
                             % (len(self.translations), len(self.classical_gens)))
        self._check()
        self.labels = self._labels()
        self.inner = self._inner()

    def _check(self):
        for j, t in enumerate(self.translations):
            if any(pairing(g, t) for g in self.quantum.generators):
                raise QecError("translation %d does not commute with the quantum stabilizer" % j)
        for i, g in enumerate(self.classical_gens):
            if not any(pairing(g, t) for t in self.translations):
                raise QecError("classical generator %d commutes with every translation" % i)
        table = np.array([[pairing(g, t) for t in self.translations] for g in self.classical_gens], dtype=np.int64)
        if table.size and np.linalg.matrix_rank(self.spec.prime_field(table)) != len(self.classical_gens):
            raise QecError("translations do not reach %d distinct inner codes" % self.spec.q ** self.m)

    def _labels(self):
        """b_i with Tr(b_ij alpha^s) = pairing(g_i, t_(j,s))."""
        spec, ell = self.spec, self.spec.ell
        gram = trace_form(spec)
        lookup = {}
        for b in range(spec.q):
            lookup[tuple(int(v) for v in (gram @ spec.coeff_table[b]) % spec.p)] = b
        labels = []
        for g in self.classical_gens:
            label = []
            for j in range(int(self.m)):
                target = tuple(pairing(g, self.translations[j * ell + s]) for s in range(ell))
                label.append(lookup[target])
            labels.append(tuple(label))
        return labels

    def _inner(self) -> StabilizerGroup:
        gens = self.quantum.signed_generators() + self.classical_gens
        inner = new_stabilizer(gens, n=self.n, spec=self.spec, classical_from=len(self.quantum.generators))
        if inner.dim != self.quantum.dim + len(self.classical_gens):
            raise QecError("classical generators are not independent of the quantum stabilizer")
        return StabilizerGroup(inner.span, inner.phases, classical=inner.classical, labels=self.labels)

    @property
    def m(self) -> Fraction:
        return Fraction(len(self.classical_gens), self.spec.ell)

    @property
    def k(self) -> Fraction:
        return Fraction(self.inner.ell_k, self.spec.ell)

    @functools.cached_property
    def gauge_group(self) -> PauliSpan:
        ops = self.quantum.generators + self.classical_gens + self.translations
        return PauliSpan(ops, n=self.n, spec=self.spec)

    @functools.cached_property
    def decomposition_basis(self) -> PauliSpan:
        logicals = logical_operators(self.inner).operators()
        targets = np.zeros(self.inner.dim, dtype=np.int64)
        destabilizers = []
        for i in range(self.quantum.dim):
            targets[:] = 0
            targets[i] = 1
            destabilizers.append(solve_pairings(self.inner.generators, targets, self.spec, self.n))
        ops = (self.quantum.generators + self.classical_gens + logicals + self.translations + destabilizers)
        basis = PauliSpan(ops, n=self.n, spec=self.spec)
        assert basis.rank == len(ops) == 2 * self.spec.ell * self.n
        return basis

    def __repr__(self):
        return "HybridCode([[%d,%s:%s]] over %s)" % (self.n, self.k, self.m, self.spec)


def minimal_translations(quantum: StabilizerGroup, classical_gens, config=None) -> List[PauliOperator]:
    """
    Lightest t_j in N(S_Q) with pairing(g_i, t_j) = delta_ij, chosen in order and
    commuting with the earlier t_i.
    """
    spec, n = quantum.spec, quantum.n
    classical_gens = list(classical_gens)
    translations = []
    for j, g in enumerate(classical_gens):
        others = [h for i, h in enumerate(classical_gens) if i != j]
        found = min_weight_search(n, spec, quantum.generators + others + translations, [g],
                                  max_weight=n, config=config)
        if found.witness is None:
            raise QecError("no translation for classical generator %d" % j)
        t = found.witness
        translations.append(canonical(power(t, pow(pairing(g, t), -1, spec.p))))
        logger.debug("translation %d: %s (weight %d)", j, translations[-1], found.weight)
    return translations


def gauge_fix(c: SubsystemCode, fixed=None) -> HybridCode:
    """
    :param fixed: one of "Z"/"X" per gauge pair, all "Z" by default
    """
    if fixed is None:
        fixed = "Z" * len(c.gauge_pairs)
    fixed = [ch.upper() for ch in fixed]
    if len(fixed) != len(c.gauge_pairs):
        raise ShapeError("selection of length %d for %d gauge pairs" % (len(fixed), len(c.gauge_pairs)))
    classical, translations = [], []
    for (gx, gz), ch in zip(c.gauge_pairs, fixed):
        if ch == "Z":
            classical.append(gz)
            translations.append(gx)
        elif ch == "X":
            classical.append(gx)
            translations.append(gz)
        else:
            raise ValueError("gauge selection must be X or Z, got %r" % ch)
    for i in range(len(classical)):
        for j in range(i + 1, len(classical)):
            if pairing(classical[i], classical[j]):
                raise FixedSetNotCommuting(i, j)
    hybrid = HybridCode(c.stabilizer, classical, translations)
    logger.info("gauge fixed %s into [[%d,%s:%s]]", "".join(fixed), hybrid.n, hybrid.k, hybrid.m)
    return hybrid


def quantum_distance(h: HybridCode, max_weight=None, config=None) -> SearchResult:
    """
    Lightest element of N(S_Q) outside G = <S_Q, S_C, translations>.
    N(S0)\\S0 lies inside that set, so this is a lower bound on inner_distance that
    depends on the translations carried by h.
    """
    outside = centralizer_basis(h.gauge_group).basis
    return min_weight_search(h.n, h.spec, h.quantum.generators, outside, max_weight=max_weight, config=config)


def inner_distance(h: HybridCode, max_weight=None, config=None) -> SearchResult:
    """Lightest element of N(S0) outside S0, shared by every inner code t_a C0."""
    outside = centralizer_basis(h.inner.span).basis
    return min_weight_search(h.n, h.spec, h.inner.generators, outside, max_weight=max_weight, config=config)


def classical_distance(h: HybridCode, max_weight=None, config=None) -> SearchResult:
    """Lightest element of N(S_Q) outside N(S0)."""
    return min_weight_search(h.n, h.spec, h.quantum.generators, h.classical_gens,
                             max_weight=max_weight, config=config)


def translation_for_message(h: HybridCode, message) -> PauliOperator:
    message = [int(a) for a in message]
    if len(message) != h.m:
        raise ShapeError("message of length %d for a code with m = %s" % (len(message), h.m))
    ell = h.spec.ell
    result = identity(h.n, h.spec)
    for j, a in enumerate(message):
        for s, coef in enumerate(h.spec.coeffs(a)):
            if coef:
                result = multiply(result, power(h.translations[j * ell + s], coef))
    return result


def inner_code_stabilizer(h: HybridCode, message) -> StabilizerGroup:
    return apply_phase_tags(h.inner, message)


def decompose_error(h: HybridCode, e: PauliOperator) -> ErrorDecomposition:
    inside, coeffs = h.decomposition_basis.member(e, coefficients=True)
    assert inside
    sizes = [h.quantum.dim, len(h.classical_gens), 2 * h.inner.ell_k, len(h.translations), h.quantum.dim]
    bounds = np.cumsum([0] + sizes)
    parts = [coeffs[bounds[i]:bounds[i + 1]] for i in range(len(sizes))]
    return ErrorDecomposition(*parts)


def hybrid_params(h: HybridCode, max_weight=None, config=None):
    """
    Parameters with enumerated distances, plus the two search results.
    d is inner_distance, the weight below which P_a E P_a = lambda P_a holds on every inner code.
    """
    d = inner_distance(h, max_weight=max_weight, config=config)
    c = classical_distance(h, max_weight=max_weight, config=config)
    params = HybridParams(h.n, h.k, h.m, d.weight, c.weight, h.spec.q)
    return params, d, c
