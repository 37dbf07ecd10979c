"""
Dense-matrix check of the hybrid Knill-Laflamme conditions.

Computational basis states |y> of n qudits are indexed by sum_j y_j q^(n-1-j),
so qudit 1 is the most significant digit. A Pauli operator is a monomial
matrix: X(a)Z(b)|y> = w^{Tr(b.y)} |y + a>.
"""
import functools
import itertools
import logging
import warnings
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from algebra.finite_field import FieldSpec
from algebra.pauli import PauliOperator, canonical
from codes.hybrid import HybridCode, inner_code_stabilizer, translation_for_message
from codes.stabilizer import StabilizerGroup
from config.qec_config import QecConfig
from utils.enumeration import colex_supports, letter_pairs
from utils.errors import DimensionTooLarge, QecError, RankMismatch

logger = logging.getLogger(__name__)

DenseOperator = np.ndarray

QUANTUM = "quantum"
CLASSICAL = "classical"


def check_dimension(spec: FieldSpec, n: int, config: QecConfig = None) -> int:
    config = config or QecConfig()
    dim = spec.q ** n
    if dim > config.oracle_cap:
        raise DimensionTooLarge(dim, config.oracle_cap)
    if dim > config.oracle_warn_dim:
        warnings.warn("dense oracle at dimension %d" % dim, RuntimeWarning)
    return dim


@functools.lru_cache(maxsize=8)
def _digits(q: int, n: int) -> np.ndarray:
    """digits[y, j] = j-th qudit value of basis state y."""
    index = np.arange(q ** n)
    return np.stack([(index // q ** (n - 1 - j)) % q for j in range(n)], axis=1)


def _omega(spec: FieldSpec):
    return np.exp(2j * np.pi / spec.p)


def pauli_action(e: PauliOperator):
    """(targets, coefs) with e|y> = coefs[y] |targets[y]>."""
    spec, n = e.spec, e.n
    q = spec.q
    digits = _digits(q, n)
    shifted = np.zeros(len(digits), dtype=np.int64)
    exponent = np.zeros(len(digits), dtype=np.int64)
    for j in range(n):
        column = digits[:, j]
        shifted = shifted * q + spec.add_table[column, e.x[j]]
        exponent += spec.trace_mul_table[e.z[j], column]
    if spec.p == 2:
        coefs = (1j ** e.phase) * (-1.0) ** (exponent % 2)
    else:
        coefs = _omega(spec) ** ((exponent + e.phase) % spec.p)
    return shifted, np.asarray(coefs, dtype=complex)


def apply_pauli(e: PauliOperator, block: np.ndarray) -> np.ndarray:
    targets, coefs = pauli_action(e)
    out = np.zeros_like(block, dtype=complex)
    if block.ndim == 1:
        out[targets] = coefs * block
    else:
        out[targets] = coefs[:, None] * block
    return out


def pauli_matrix(e: PauliOperator, config: QecConfig = None) -> DenseOperator:
    dim = check_dimension(e.spec, e.n, config)
    targets, coefs = pauli_action(e)
    matrix = np.zeros((dim, dim), dtype=complex)
    matrix[targets, np.arange(dim)] = coefs
    return matrix


def _project(s: StabilizerGroup, block: np.ndarray) -> np.ndarray:
    p = s.spec.p
    omega = _omega(s.spec)
    for g, tag in zip(s.generators, s.phases):
        # eigenvalue w^{-tag}: average (w^{tag} g)^k over k
        scale = omega ** tag
        term = block
        total = block.astype(complex)
        for _ in range(1, p):
            term = scale * apply_pauli(g, term)
            total = total + term
        block = total / p
    return block


def projector(s: StabilizerGroup, config: QecConfig = None) -> DenseOperator:
    config = config or QecConfig()
    dim = check_dimension(s.spec, s.n, config)
    matrix = _project(s, np.eye(dim, dtype=complex))
    expected = dim // s.spec.p ** s.dim
    found = int(round(np.trace(matrix).real))
    if found != expected:
        raise RankMismatch(expected, found)
    return matrix


def code_basis(s: StabilizerGroup, config: QecConfig = None) -> np.ndarray:
    """Orthonormal columns spanning the code space, from projected basis states."""
    config = config or QecConfig()
    dim = check_dimension(s.spec, s.n, config)
    rank = s.spec.p ** s.ell_k
    columns = []
    for y in range(dim):
        unit = np.zeros(dim, dtype=complex)
        unit[y] = 1.0
        v = _project(s, unit)
        for u in columns:
            v = v - np.vdot(u, v) * u
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            columns.append(v / norm)
            if len(columns) == rank:
                break
    if len(columns) != rank:
        raise RankMismatch(rank, len(columns))
    return np.stack(columns, axis=1)


def messages(h: HybridCode):
    return [tuple(a) for a in itertools.product(range(h.spec.q), repeat=int(h.m))]


def inner_bases(h: HybridCode, config: QecConfig = None):
    """B_a = t_a B_0 for every message a, each checked against its own stabilizer."""
    config = config or QecConfig()
    base = code_basis(h.inner, config)
    bases = []
    for a in messages(h):
        block = apply_pauli(translation_for_message(h, a), base)
        for g in inner_code_stabilizer(h, a).signed_generators():
            if np.abs(apply_pauli(g, block) - block).max() > config.tolerance:
                raise QecError("translated basis for message %s is not stabilized by %s" % (a, g))
        bases.append(block)
    return bases


def paulis_below(n: int, spec: FieldSpec, weight: int):
    """Identity, then every phase-free Pauli of weight 1..weight-1 by weight, support and letter."""
    letters = letter_pairs(spec.q)
    yield canonical(PauliOperator(spec, [0] * n, [0] * n, 0))
    for w in range(1, min(weight - 1, n) + 1):
        for support in colex_supports(n, w):
            for choice in itertools.product(letters, repeat=w):
                x = [0] * n
                z = [0] * n
                for j, (a, b) in zip(support, choice):
                    x[j], z[j] = a, b
                yield canonical(PauliOperator(spec, x, z, 0))


@dataclass
class Violation:
    operator: PauliOperator
    weight: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    condition: str
    residual: float


@dataclass
class KLReport:
    d: int
    c: int
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def min_weight(self, condition=None):
        weights = [v.weight for v in self.violations if condition is None or v.condition == condition]
        return min(weights) if weights else None

    def summary(self) -> str:
        if self.passed:
            return "pass (d=%d, c=%d, %d operators)" % (self.d, self.c, self.checked)
        return "fail (d=%d, c=%d): %d violations, lightest quantum %s, classical %s" % (
            self.d, self.c, len(self.violations), self.min_weight(QUANTUM), self.min_weight(CLASSICAL))


def _run(h: HybridCode, d: int, c: int, cross_blocks: bool, config: QecConfig) -> KLReport:
    """
    :param cross_blocks: also require B_a^dag E B_b = lambda I between different messages
    """
    bases = inner_bases(h, config)
    labels = messages(h)
    K = bases[0].shape[1]
    stacked = np.concatenate(bases, axis=1)
    report = KLReport(d, c)
    eye = np.eye(K)
    tol = config.tolerance
    n_msg = len(bases)
    ops = list(paulis_below(h.n, h.spec, max(d, c)))
    for e in tqdm(ops, desc="kl", disable=not config.verbose):
        w = len(e.support)
        gram = stacked.conj().T @ apply_pauli(e, stacked)
        report.checked += 1
        for ia in range(n_msg):
            for ib in range(n_msg):
                block = gram[ia * K:(ia + 1) * K, ib * K:(ib + 1) * K]
                if ia == ib or cross_blocks:
                    if w < d:
                        lam = np.trace(block) / K
                        residual = np.abs(block - lam * eye).max()
                        if residual > tol:
                            report.violations.append(Violation(e, w, labels[ia], labels[ib], QUANTUM, float(residual)))
                            continue
                if ia != ib and w < c:
                    residual = np.abs(block).max()
                    if residual > tol:
                        report.violations.append(Violation(e, w, labels[ia], labels[ib], CLASSICAL, float(residual)))
    logger.info("checked %d operators on %d inner codes: %s", report.checked, n_msg, report.summary())
    return report


def check_detection(h: HybridCode, d: int, c: int, config: QecConfig = None) -> KLReport:
    """P_a E P_a = lambda P_a for wt(E) < d, P_a F P_b = 0 for wt(F) < c and a != b."""
    config = config or QecConfig()
    check_dimension(h.spec, h.n, config)
    return _run(h, d, c, cross_blocks=False, config=config)


def check_subsystem_conditions(h: HybridCode, d: int, c: int, config: QecConfig = None) -> KLReport:
    """B_a^dag E B_b = lambda I for wt(E) < d and all a, b; B_a^dag F B_b = 0 for wt(F) < c and a != b."""
    config = config or QecConfig()
    check_dimension(h.spec, h.n, config)
    return _run(h, d, c, cross_blocks=True, config=config)


def check_correction(h: HybridCode, d: int, c: int, config: QecConfig = None) -> KLReport:
    """
    Correction of floor((d-1)/2) quantum and floor((c-1)/2) classical errors.
    E^dag F over wt(E), wt(F) <= t runs over the Paulis of weight <= 2t up to phase.
    """
    config = config or QecConfig()
    check_dimension(h.spec, h.n, config)
    tq = (d - 1) // 2
    tc = (c - 1) // 2
    report = _run(h, 2 * tq + 1, 2 * tc + 1, cross_blocks=False, config=config)
    report.d, report.c = d, c
    return report
