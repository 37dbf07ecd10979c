"""
n-qudit Pauli operators w^c X(a) Z(b) over GF(q).

For p = 2 the phase is a power of i (mod 4), for odd p a power of w (mod p).
The stored phase is the raw exponent in front of X(a)Z(b); for p = 2 the
Hermitian phase subtracts sum_j Tr(a_j b_j), so the letter Y parses to raw
phase 1 (Y = iXZ) and Hermitian phase 0.
"""
import re
from dataclasses import dataclass
from typing import Tuple

from algebra.finite_field import FieldSpec
from utils.errors import ParseError, ShapeError

LETTERS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
LETTER_OF = {v: k for k, v in LETTERS.items()}
SIGN_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}

_binary_re = re.compile(r"^(\+?|-)(i?)([A-Za-z]*)$")
_token_re = re.compile(r"^\((\d+)\|(\d+)\)$")
_omega_re = re.compile(r"^w\^(\d+)$")


def phase_modulus(spec: FieldSpec) -> int:
    return 4 if spec.p == 2 else spec.p


def _reorder_factor(spec: FieldSpec) -> int:
    # exponent picked up by Z(b)X(a') = w^{Tr(b a')} X(a')Z(b), in units of the phase group
    return 2 if spec.p == 2 else 1


@dataclass(frozen=True)
class PauliOperator:
    spec: FieldSpec
    x: Tuple[int, ...]
    z: Tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        object.__setattr__(self, "z", tuple(int(v) for v in self.z))
        object.__setattr__(self, "phase", int(self.phase) % phase_modulus(self.spec))
        if len(self.x) != len(self.z):
            raise ShapeError("x-part has length %d but z-part has length %d" % (len(self.x), len(self.z)))
        q = self.spec.q
        if any(not 0 <= v < q for v in self.x + self.z):
            raise ShapeError("entries must be encodings in [0, %d)" % q)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def xz_trace(self) -> int:
        """sum_j Tr(a_j b_j), mod 4 for p = 2 (one factor i per Y-type qudit) and mod p otherwise."""
        table = self.spec.trace_mul_table
        return int(sum(table[b, a] for a, b in zip(self.x, self.z))) % phase_modulus(self.spec)

    @property
    def hermitian_phase(self) -> int:
        """Exponent of i in front of the Hermitian operator with the same x and z (p = 2 only)."""
        if self.spec.p != 2:
            raise ValueError("hermitian_phase is defined for characteristic 2 only, got p=%d" % self.spec.p)
        return (self.phase - self.xz_trace) % 4

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.x[j] or self.z[j])

    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    def with_phase(self, phase: int) -> "PauliOperator":
        return PauliOperator(self.spec, self.x, self.z, phase)

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        return format_pauli(self)


def identity(n: int, spec: FieldSpec) -> PauliOperator:
    return PauliOperator(spec, (0,) * n, (0,) * n, 0)


def single(n: int, spec: FieldSpec, j: int, a: int = 0, b: int = 0) -> PauliOperator:
    """X(a)Z(b) acting on qudit j (0-based) of n."""
    x = [0] * n
    z = [0] * n
    x[j] = a
    z[j] = b
    return PauliOperator(spec, x, z, 0)


def _check_shapes(e1: PauliOperator, e2: PauliOperator):
    if e1.spec != e2.spec:
        raise ShapeError("operators over %s and %s" % (e1.spec, e2.spec))
    if e1.n != e2.n:
        raise ShapeError("operators on %d and %d qudits" % (e1.n, e2.n))


def weight(e: PauliOperator) -> int:
    return sum(1 for a, b in zip(e.x, e.z) if a or b)


def pairing(e1: PauliOperator, e2: PauliOperator) -> int:
    """Tr(b.a' - b'.a) in F_p; zero iff e1 and e2 commute."""
    _check_shapes(e1, e2)
    table = e1.spec.trace_mul_table
    total = 0
    for a, b, a2, b2 in zip(e1.x, e1.z, e2.x, e2.z):
        total += table[b, a2] - table[b2, a]
    return int(total) % e1.spec.p


def multiply(e1: PauliOperator, e2: PauliOperator) -> PauliOperator:
    _check_shapes(e1, e2)
    spec = e1.spec
    add = spec.add_table
    table = spec.trace_mul_table
    x = [add[a, a2] for a, a2 in zip(e1.x, e2.x)]
    z = [add[b, b2] for b, b2 in zip(e1.z, e2.z)]
    reorder = sum(table[b, a2] for b, a2 in zip(e1.z, e2.x))
    phase = e1.phase + e2.phase + _reorder_factor(spec) * int(reorder)
    return PauliOperator(spec, x, z, phase)


def inverse(e: PauliOperator) -> PauliOperator:
    spec = e.spec
    neg = spec.neg_table
    x = [neg[a] for a in e.x]
    z = [neg[b] for b in e.z]
    # multiply(e, e^-1) picks up sum Tr(b.(-a)) from reordering
    reorder = sum(spec.trace_mul_table[b, a2] for b, a2 in zip(e.z, x))
    phase = -e.phase - _reorder_factor(spec) * int(reorder)
    return PauliOperator(spec, x, z, phase)


def power(e: PauliOperator, k: int) -> PauliOperator:
    k = int(k)
    if k < 0:
        return power(inverse(e), -k)
    result = identity(e.n, e.spec)
    base = e
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def product(ops, n: int, spec: FieldSpec, exponents=None) -> PauliOperator:
    """Ordered product of ops[i]**exponents[i]."""
    result = identity(n, spec)
    for i, op in enumerate(ops):
        k = 1 if exponents is None else int(exponents[i])
        if k:
            result = multiply(result, power(op, k))
    return result


def canonical(e: PauliOperator) -> PauliOperator:
    """Same x and z with the phase of the Hermitian representative (p = 2) or phase 0 (p odd)."""
    if e.spec.p == 2:
        return e.with_phase(e.xz_trace)
    return e.with_phase(0)


def parse_pauli(text: str, spec: FieldSpec, n: int = None, line: int = None) -> PauliOperator:
    """
    :param text: "YIZXXY" style letters with optional "-", "i", "-i" prefix when q = 2,
        otherwise space separated "(a|b)" tokens with an optional leading phase token
    :param n: expected number of qudits, checked when given
    """
    text = text.strip()
    if spec.q == 2:
        match = _binary_re.match(text)
        if match is None:
            raise ParseError("malformed Pauli string %r" % text, line=line, column=1)
        sign, imag, letters = match.groups()
        offset = len(sign) + len(imag)
        x, z = [], []
        for col, ch in enumerate(letters):
            if ch not in LETTERS:
                raise ParseError("bad Pauli letter %r" % ch, line=line, column=offset + col + 1)
            a, b = LETTERS[ch]
            x.append(a)
            z.append(b)
        herm = (2 if sign == "-" else 0) + (1 if imag else 0)
        op = PauliOperator(spec, x, z, 0)
        op = op.with_phase(herm + op.xz_trace)
    else:
        tokens = text.split()
        column = 1
        herm = 0
        raw = 0
        if tokens and not tokens[0].startswith("("):
            head = tokens.pop(0)
            if spec.p == 2:
                inverse_prefix = {v: k for k, v in SIGN_PREFIX.items() if v}
                if head not in inverse_prefix:
                    raise ParseError("bad phase token %r" % head, line=line, column=column)
                herm = inverse_prefix[head]
            else:
                match = _omega_re.match(head)
                if match is None:
                    raise ParseError("bad phase token %r" % head, line=line, column=column)
                raw = int(match.group(1))
            column += len(head) + 1
        x, z = [], []
        for token in tokens:
            match = _token_re.match(token)
            if match is None:
                raise ParseError("bad qudit token %r" % token, line=line, column=column)
            a, b = int(match.group(1)), int(match.group(2))
            if a >= spec.q or b >= spec.q:
                raise ParseError("encoding out of range in %r for %s" % (token, spec), line=line, column=column)
            x.append(a)
            z.append(b)
            column += len(token) + 1
        op = PauliOperator(spec, x, z, raw)
        if spec.p == 2:
            op = op.with_phase(herm + op.xz_trace)
    if n is not None and op.n != n:
        raise ParseError("expected %d qudits, got %d" % (n, op.n), line=line, column=1)
    return op


def format_pauli(e: PauliOperator) -> str:
    spec = e.spec
    if spec.q == 2:
        letters = "".join(LETTER_OF[(a, b)] for a, b in zip(e.x, e.z))
        return SIGN_PREFIX[e.hermitian_phase] + letters
    tokens = ["(%d|%d)" % (a, b) for a, b in zip(e.x, e.z)]
    if spec.p == 2 and e.hermitian_phase:
        tokens.insert(0, SIGN_PREFIX[e.hermitian_phase])
    elif spec.p != 2 and e.phase:
        tokens.insert(0, "w^%d" % e.phase)
    return " ".join(tokens)
