"""
Subsystem codes on an n1 x n2 lattice from two classical linear codes.

Qudit (i, j) sits at index i * n2 + j. Z-type operators are built from the
parity checks of C1 along columns, X-type operators from the parity checks of
C2 along rows.
"""
import itertools
import logging
from typing import Optional

import numpy as np

from algebra.finite_field import FieldSpec, get_field
from algebra.pauli import PauliOperator
from algebra.symplectic import PauliSpan, symplectic_pairs
from codes.hybrid import HybridParams, gauge_fix
from codes.subsystem import SubsystemCode, validate_subsystem
from utils.errors import FieldMismatch, NoCodewords, QecError

logger = logging.getLogger(__name__)


class LinearCode(object):
    def __init__(self, spec: FieldSpec, generator, parity_check=None):
        """
        :param generator: k x n matrix of field encodings
        :param parity_check: (n - k) x n matrix, derived from the generator when None
        """
        self.spec = spec
        GF = spec.GF
        generator = np.asarray(generator, dtype=np.int64)
        if generator.ndim != 2:
            raise QecError("generator matrix must be two dimensional")
        self.n = generator.shape[1]
        self.generator = GF(generator)
        if generator.shape[0] and np.linalg.matrix_rank(self.generator) != generator.shape[0]:
            raise QecError("generator matrix rows are dependent")
        if parity_check is None:
            parity_check = self._kernel(self.generator)
        self.parity_check = GF(np.asarray(parity_check, dtype=np.int64).reshape(-1, self.n))
        if self.parity_check.shape[0] and np.linalg.matrix_rank(self.parity_check) != self.parity_check.shape[0]:
            raise QecError("parity-check matrix rows are dependent")
        if self.parity_check.shape[0] != self.n - self.k:
            raise QecError("parity-check matrix has %d rows, expected %d" % (self.parity_check.shape[0], self.n - self.k))
        if self.k and self.parity_check.shape[0] and (self.generator @ self.parity_check.T).view(np.ndarray).any():
            raise QecError("generator and parity-check matrices are not orthogonal")

    def _kernel(self, matrix):
        if matrix.shape[0] == 0:
            return self.spec.GF.Identity(self.n)
        return matrix.null_space()

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    def codewords(self):
        """All q^k codewords, one per row."""
        q = self.spec.q
        if self.k == 0:
            return np.zeros((1, self.n), dtype=np.int64)
        messages = self.spec.GF(np.array(list(itertools.product(range(q), repeat=self.k)), dtype=np.int64).reshape(-1, self.k))
        return (messages @ self.generator).view(np.ndarray)

    def __repr__(self):
        return "LinearCode([%d,%d] over %s)" % (self.n, self.k, self.spec)


def classical_min_distance(c: LinearCode) -> int:
    if c.k == 0:
        raise NoCodewords("the zero-dimensional code has no nonzero codewords")
    weights = np.count_nonzero(c.codewords(), axis=1)
    return int(weights[weights > 0].min())


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.spec, c.parity_check.view(np.ndarray), c.generator.view(np.ndarray))


def repetition_code(n: int, spec: FieldSpec = None) -> LinearCode:
    """[n,1,n] code with the chained checks x_i - x_(i+1)."""
    spec = spec or get_field(2)
    minus_one = int(spec.neg_table[1])
    checks = np.zeros((n - 1, n), dtype=np.int64)
    for i in range(n - 1):
        checks[i, i] = 1
        checks[i, i + 1] = minus_one
    return LinearCode(spec, np.ones((1, n), dtype=np.int64), checks)


def _outer(left, right):
    return (left[:, None] * right[None, :]).view(np.ndarray)


def _lattice_op(spec, n1, n2, values, kind):
    """Z- or X-type operator with values[i][j] on qudit (i, j)."""
    flat = [int(v) for v in np.asarray(values).reshape(-1)]
    zeros = [0] * (n1 * n2)
    if kind == "Z":
        return PauliOperator(spec, zeros, flat, 0)
    return PauliOperator(spec, flat, zeros, 0)


def construct_bc(c1: LinearCode, c2: LinearCode) -> SubsystemCode:
    if c1.spec != c2.spec:
        raise FieldMismatch("codes over %s and %s" % (c1.spec, c2.spec))
    spec = c1.spec
    GF = spec.GF
    n1, n2 = c1.n, c2.n
    scalars = [GF(spec.p ** s) for s in range(spec.ell)]
    stabilizers = []
    for h in c1.parity_check:
        for v in c2.generator:
            for beta in scalars:
                stabilizers.append(_lattice_op(spec, n1, n2, _outer(h * beta, v), "Z"))
    for u in c2.parity_check:
        for w in c1.generator:
            for beta in scalars:
                stabilizers.append(_lattice_op(spec, n1, n2, _outer(w * beta, u), "X"))
    gauge_z = []
    for j in range(n2):
        for h in c1.parity_check:
            for beta in scalars:
                values = np.zeros((n1, n2), dtype=np.int64)
                values[:, j] = (h * beta).view(np.ndarray)
                gauge_z.append(_lattice_op(spec, n1, n2, values, "Z"))
    gauge_x = []
    for i in range(n1):
        for u in c2.parity_check:
            for beta in scalars:
                values = np.zeros((n1, n2), dtype=np.int64)
                values[i, :] = (u * beta).view(np.ndarray)
                gauge_x.append(_lattice_op(spec, n1, n2, values, "X"))
    center = PauliSpan(stabilizers, n=n1 * n2, spec=spec)
    pairs, _ = symplectic_pairs(gauge_z + gauge_x, center=center)
    expected = spec.ell * (n1 - c1.k) * (n2 - c2.k)
    assert len(pairs) == expected, "expected %d gauge pairs, found %d" % (expected, len(pairs))
    code = validate_subsystem(stabilizers, [(gx, gz) for gz, gx in pairs], n=n1 * n2, spec=spec)
    assert code.k == c1.k * c2.k
    return code


def dual_distance(c: LinearCode) -> Optional[int]:
    if c.k == c.n:
        return None
    return classical_min_distance(dual(c))


def construct_bc_hybrid(c1: LinearCode, c2: LinearCode):
    """
    Gauge fix every Z-type gauge operator of construct_bc(c1, c2).

    :return: (hybrid code, predicted parameters), the predicted c is the lower bound
        min(d, max(d1_dual, d2_dual))
    """
    code = construct_bc(c1, c2)
    hybrid = gauge_fix(code)
    d = min(classical_min_distance(c1), classical_min_distance(c2))
    duals = [x for x in (dual_distance(c1), dual_distance(c2)) if x is not None]
    c = min(d, max(duals)) if duals else d
    predicted = HybridParams(c1.n * c2.n, c1.k * c2.k, (c1.n - c1.k) * (c2.n - c2.k), d, c, c1.spec.q)
    logger.info("Bacon-Casaccino hybrid from [%d,%d] x [%d,%d]: predicted %s", c1.n, c1.k, c2.n, c2.k, predicted)
    return hybrid, predicted


def bacon_shor(n: int, spec: FieldSpec = None) -> SubsystemCode:
    rep = repetition_code(n, spec)
    return construct_bc(rep, rep)

