"""
Arithmetic in GF(p^ell) in a fixed polynomial basis.

Elements are encoded as integers e = sum(coeffs[i] * p**i), the coefficient of
alpha**i being coeffs[i], where alpha is the class of x modulo the defining
polynomial. The same encoding is used by galois for extension fields, so the
library does the arithmetic while the tables below serve the hot loops.
"""
import functools
from dataclasses import dataclass
from typing import Tuple

import galois
import numpy as np

from utils.errors import DivisionByZero, FieldMismatch, QecError

# lexicographically smallest monic irreducible polynomial, coefficients in ascending degree
DEFAULT_FIELDS = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),  # x^2 + x + 1
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    8: (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, 2, (1, 0, 1)),  # x^2 + 1
}


@dataclass(frozen=True)
class FieldSpec:
    p: int
    ell: int
    poly: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "poly", tuple(int(c) for c in self.poly))
        if not galois.is_prime(int(self.p)):
            raise QecError("characteristic %d is not prime" % self.p)
        if self.ell < 1:
            raise QecError("extension degree must be at least 1, got %d" % self.ell)
        if len(self.poly) != self.ell + 1 or self.poly[-1] != 1:
            raise QecError("defining polynomial must be monic of degree %d, got %s" % (self.ell, self.poly))
        if any(c < 0 or c >= self.p for c in self.poly):
            raise QecError("polynomial coefficients must lie in F_%d, got %s" % (self.p, self.poly))
        if self.ell > 1 and not galois.Poly(list(self.poly), field=galois.GF(self.p), order="asc").is_irreducible():
            raise QecError("polynomial %s is reducible over F_%d" % (self.poly, self.p))

    @property
    def q(self) -> int:
        return self.p ** self.ell

    @functools.cached_property
    def GF(self):
        if self.ell == 1:
            return galois.GF(self.p)
        poly = galois.Poly(list(self.poly), field=galois.GF(self.p), order="asc")
        return galois.GF(self.q, irreducible_poly=poly)

    @functools.cached_property
    def prime_field(self):
        return galois.GF(self.p)

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        elems = self.GF.elements
        return (elems[:, None] + elems[None, :]).view(np.ndarray).astype(np.int64)

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        elems = self.GF.elements
        return (elems[:, None] * elems[None, :]).view(np.ndarray).astype(np.int64)

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return (-self.GF.elements).view(np.ndarray).astype(np.int64)

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        table = np.zeros(self.q, dtype=np.int64)
        nonzero = self.GF.elements[1:]
        table[1:] = (nonzero ** -1).view(np.ndarray)
        return table

    @functools.cached_property
    def trace_table(self) -> np.ndarray:
        return self.GF.elements.field_trace().view(np.ndarray).astype(np.int64)

    @functools.cached_property
    def trace_mul_table(self) -> np.ndarray:
        """trace_mul_table[b, x] = Tr(b * x)."""
        return self.trace_table[self.mul_table]

    @functools.cached_property
    def coeff_table(self) -> np.ndarray:
        """coeff_table[e] = the ell F_p coordinates of e in the basis 1, alpha, ..., alpha^(ell-1)."""
        values = np.arange(self.q)
        return np.stack([(values // self.p ** i) % self.p for i in range(self.ell)], axis=1)

    def coeffs(self, value: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.coeff_table[value])

    def from_coeffs(self, coeffs) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) != self.ell:
            raise QecError("expected %d coefficients, got %d" % (self.ell, len(coeffs)))
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    def __str__(self):
        if self.ell == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.ell)


@functools.lru_cache(maxsize=None)
def get_field(q: int) -> FieldSpec:
    if q not in DEFAULT_FIELDS:
        raise QecError("no built-in field of order %d (supported: %s)" % (q, sorted(DEFAULT_FIELDS)))
    p, ell, poly = DEFAULT_FIELDS[q]
    return FieldSpec(p, ell, poly)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value))
        if not 0 <= self.value < self.spec.q:
            raise QecError("encoding %d out of range for %s" % (self.value, self.spec))

    def _check(self, other):
        if isinstance(other, int):
            return FieldElement(self.spec, other)
        if not isinstance(other, FieldElement):
            raise TypeError("cannot combine a field element with %r" % type(other))
        if other.spec != self.spec:
            raise FieldMismatch("elements of %s and %s" % (self.spec, other.spec))
        return other

    @property
    def coeffs(self):
        return self.spec.coeffs(self.value)

    def __int__(self):
        return self.value

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.add_table[self.value, other.value])

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_table[self.value])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.mul_table[self.value, other.value])

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero("inverse of zero in %s" % self.spec)
        return FieldElement(self.spec, self.spec.inv_table[self.value])

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, exponent: int):
        exponent = int(exponent)
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = FieldElement(self.spec, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def trace(self):
        return trace(self)

    def __repr__(self):
        return "FieldElement(%s, %d)" % (self.spec, self.value)


def field_arith(op, x, y=None):
    """Dispatch one of add, mul, neg, inv, pow on field elements."""
    if op == "add":
        return x + y
    elif op == "mul":
        return x * y
    elif op == "neg":
        return -x
    elif op == "inv":
        return x.inverse()
    elif op == "pow":
        return x ** int(y)
    raise ValueError("unknown field operation %r" % op)


def trace(x: FieldElement) -> FieldElement:
    """Tr(x) = sum of x^(p^i) for i < ell, returned as an element of the prime subfield."""
    return FieldElement(x.spec, x.spec.trace_table[x.value])
