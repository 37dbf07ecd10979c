"""
F_p-linear algebra on Pauli operators.

Every operator on n qudits over GF(p^ell) expands to a vector of F_p^(2 ell n):
the ell coordinates of each x_j followed by those of each z_j. Spans, membership
and centralizers are computed on these vectors with galois FieldArrays; phases
are carried by the operators that make up a basis and ignored by membership.
"""
import functools
import logging
from typing import List, Optional

import numpy as np

from algebra.finite_field import FieldSpec
from algebra.pauli import PauliOperator, canonical, multiply, pairing, power
from utils.errors import ShapeError

logger = logging.getLogger(__name__)


def expand(e: PauliOperator) -> np.ndarray:
    coeffs = e.spec.coeff_table
    return np.concatenate([coeffs[list(e.x)].reshape(-1), coeffs[list(e.z)].reshape(-1)]).astype(np.int64)


def from_vector(vec, spec: FieldSpec, n: int) -> PauliOperator:
    """Inverse of expand; the phase is set to the canonical one."""
    vec = np.asarray(vec, dtype=np.int64).reshape(2, n, spec.ell)
    weights = spec.p ** np.arange(spec.ell)
    x = (vec[0] * weights).sum(axis=1)
    z = (vec[1] * weights).sum(axis=1)
    return canonical(PauliOperator(spec, x, z, 0))


@functools.lru_cache(maxsize=None)
def trace_form(spec: FieldSpec) -> np.ndarray:
    """T[s, t] = Tr(alpha^s alpha^t), the Gram matrix of the trace form."""
    powers = [spec.p ** s for s in range(spec.ell)]
    return np.array([[spec.trace_mul_table[a, b] for b in powers] for a in powers], dtype=np.int64)


@functools.lru_cache(maxsize=None)
def symplectic_form(spec: FieldSpec, n: int):
    """Omega with pairing(e1, e2) = expand(e1) @ Omega @ expand(e2)."""
    block = np.kron(np.eye(n, dtype=np.int64), trace_form(spec))
    size = n * spec.ell
    omega = np.zeros((2 * size, 2 * size), dtype=np.int64)
    omega[:size, size:] = (-block) % spec.p
    omega[size:, :size] = block
    return spec.prime_field(omega)


def check_matrix(ops, spec: FieldSpec, n: int) -> np.ndarray:
    """Rows h_i with expand(E) @ h_i = pairing(E, ops[i]) mod p."""
    GF = spec.prime_field
    if len(ops) == 0:
        return np.zeros((0, 2 * spec.ell * n), dtype=np.int64)
    rows = GF(np.stack([expand(op) for op in ops]))
    return (rows @ symplectic_form(spec, n).T).view(np.ndarray).astype(np.int64)


class PauliSpan(object):
    def __init__(self, ops, n=None, spec=None):
        """
        :param ops: generating operators, phases are kept on the chosen basis
        :param n: number of qudits, needed when ops is empty
        :param spec: field of the operators, needed when ops is empty
        """
        ops = list(ops)
        if ops:
            n = ops[0].n if n is None else n
            spec = ops[0].spec if spec is None else spec
        if n is None or spec is None:
            raise ShapeError("an empty span needs n and spec")
        for op in ops:
            if op.n != n or op.spec != spec:
                raise ShapeError("operator on %d qudits over %s in a span on %d over %s" % (op.n, op.spec, n, spec))
        self.n = n
        self.spec = spec
        self.GF = spec.prime_field
        self.length = 2 * spec.ell * n
        self.basis: List[PauliOperator] = []
        self.basis_index: List[int] = []
        self._rows = []
        self._pivots = []
        self._combos = []
        for i, op in enumerate(ops):
            residual, combo = self._reduce(self.GF(expand(op)))
            if not residual.view(np.ndarray).any():
                continue
            k = len(self.basis)
            combo = np.concatenate([combo, self.GF([1])])
            self._combos = [np.concatenate([c, self.GF([0])]) for c in self._combos]
            pivot = int(np.flatnonzero(residual.view(np.ndarray))[0])
            scale = residual[pivot] ** -1
            self._rows.append(residual * scale)
            self._combos.append(combo * scale)
            self._pivots.append(pivot)
            self.basis.append(op)
            self.basis_index.append(i)
            assert len(self.basis) == k + 1

    def _reduce(self, vec):
        combo = self.GF.Zeros(len(self.basis))
        residual = vec.copy()
        for row, pivot, row_combo in zip(self._rows, self._pivots, self._combos):
            coef = residual[pivot]
            if coef:
                residual = residual - coef * row
                combo = combo - coef * row_combo
        return residual, combo

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def matrix(self):
        if not self.basis:
            return self.GF.Zeros((0, self.length))
        return self.GF(np.stack([expand(op) for op in self.basis]))

    def member(self, e: PauliOperator, coefficients: bool = False):
        if e.n != self.n or e.spec != self.spec:
            raise ShapeError("operator on %d qudits over %s tested against a span on %d over %s"
                             % (e.n, e.spec, self.n, self.spec))
        residual, combo = self._reduce(self.GF(expand(e)))
        inside = not residual.view(np.ndarray).any()
        if coefficients:
            return inside, ((-combo).view(np.ndarray).astype(np.int64) if inside else None)
        return inside

    def __contains__(self, e):
        return self.member(e)

    def __len__(self):
        return self.rank

    def __repr__(self):
        return "PauliSpan(n=%d, %s, rank=%d)" % (self.n, self.spec, self.rank)


def reduce_and_rank(ops, n=None, spec=None) -> PauliSpan:
    return PauliSpan(ops, n=n, spec=spec)


def member(span: PauliSpan, e: PauliOperator, coefficients: bool = False):
    return span.member(e, coefficients=coefficients)


def centralizer_basis(span: PauliSpan) -> PauliSpan:
    n, spec = span.n, span.spec
    GF = spec.prime_field
    if span.rank == 0:
        kernel = GF.Identity(span.length)
    else:
        kernel = (span.matrix @ symplectic_form(spec, n)).null_space()
    ops = [from_vector(row.view(np.ndarray), spec, n) for row in kernel]
    centralizer = PauliSpan(ops, n=n, spec=spec)
    logger.debug("centralizer of a rank %d span has dimension %d", span.rank, centralizer.rank)
    return centralizer


def solve_pairings(ops, targets, spec: FieldSpec, n: int) -> Optional[PauliOperator]:
    """An operator v with pairing(ops[i], v) = targets[i], or None when the system is inconsistent."""
    GF = spec.prime_field
    length = 2 * spec.ell * n
    if len(ops) == 0:
        return from_vector(np.zeros(length, dtype=np.int64), spec, n)
    rows = GF(np.stack([expand(op) for op in ops])) @ symplectic_form(spec, n)
    target = GF(np.asarray(targets, dtype=np.int64).reshape(-1, 1) % spec.p)
    rref = GF(np.concatenate([rows.view(np.ndarray), target.view(np.ndarray)], axis=1)).row_reduce()
    solution = np.zeros(length, dtype=np.int64)
    for row in rref.view(np.ndarray):
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            continue
        if nonzero[0] == length:
            return None
        solution[nonzero[0]] = row[-1]
    return from_vector(solution, spec, n)


def symplectic_pairs(ops, center: PauliSpan = None):
    """
    Symplectic Gram-Schmidt in candidate order.

    :param ops: candidate operators
    :param center: span whose members are never chosen as pair members
    :return: (pairs, leftovers) with pairing(first, second) = 1 on each pair and
        every pair commuting with every other pair and with the leftovers
    """
    pending = list(ops)
    pairs = []
    leftovers = []
    while pending:
        u = pending.pop(0)
        if u.is_identity():
            continue
        if center is not None and center.member(u):
            leftovers.append(u)
            continue
        partner = None
        for idx, w in enumerate(pending):
            if pairing(u, w) and (center is None or not center.member(w)):
                partner = idx
                break
        if partner is None:
            leftovers.append(u)
            continue
        v = pending.pop(partner)
        p = u.spec.p
        v = canonical(power(v, pow(pairing(u, v), -1, p)))
        pairs.append((canonical(u), v))
        updated = []
        for w in pending:
            wv = pairing(w, v)
            wu = pairing(w, u)
            if wv:
                w = multiply(w, power(u, -wv))
            if wu:
                w = multiply(w, power(v, wu))
            updated.append(canonical(w))
        pending = updated
    return pairs, leftovers


def check_isotropic(ops):
    """First (i, j) with pairing(ops[i], ops[j]) != 0, or None."""
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if pairing(ops[i], ops[j]):
                return i, j
    return None
