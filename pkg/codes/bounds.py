from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from codes.hybrid import HybridParams
from utils.errors import DifferentLength

SATURATES = "saturates"
SATISFIES = "satisfies"
VIOLATES = "violates"

EQUAL = "equal"
LEFT_BELOW = "p1<=p2"
RIGHT_BELOW = "p2<=p1"
INCOMPARABLE = "incomparable"

RULED_OUT = "ruled_out"
NOT_RULED_OUT = "not_ruled_out"
NOT_APPLICABLE = "not_applicable"

KNOWN_LENGTH_9 = [
    ("[[9,1:2,3]]", HybridParams(9, 1, 2, 3, 3, 2)),
    ("[[9,2:2,3]]", HybridParams(9, 2, 2, 3, 3, 2)),
    ("[[9,3:1,3]]", HybridParams(9, 3, 1, 3, 3, 2)),
    ("[[9,1:4,3:2]]", HybridParams(9, 1, 4, 3, 2, 2)),
]


def quantum_singleton(n, k, d) -> bool:
    return Fraction(k) <= n - 2 * (d - 1)


def classical_singleton(n, m, c) -> bool:
    return Fraction(m) <= n - c + 1


def subsystem_singleton(n, k, r, d) -> bool:
    return Fraction(k) + Fraction(r) <= n - 2 * (d - 1)


def _require_bounded(p: HybridParams, *names):
    missing = [name for name in names if getattr(p, name) is None]
    if missing:
        raise ValueError("bounded %s required, got %s" % (" and ".join(missing), p))


def singleton_check(p: HybridParams) -> str:
    """k + m against n - 2(d - 1)."""
    _require_bounded(p, "d")
    bound = p.n - 2 * (p.d - 1)
    total = p.k + p.m
    if total == bound:
        return SATURATES
    if total < bound:
        return SATISFIES
    return VIOLATES


def params_preceq(p1: HybridParams, p2: HybridParams) -> str:
    if p1.n != p2.n or p1.q != p2.q:
        raise DifferentLength("cannot compare %s with %s" % (p1, p2))
    _require_bounded(p1, "d", "c")
    _require_bounded(p2, "d", "c")
    left = (p1.k + p1.m, p1.k, p1.d, p1.c)
    right = (p2.k + p2.m, p2.k, p2.d, p2.c)
    if left == right:
        return EQUAL
    if all(a <= b for a, b in zip(left, right)):
        return LEFT_BELOW
    if all(a >= b for a, b in zip(left, right)):
        return RIGHT_BELOW
    return INCOMPARABLE


@dataclass
class SplitResult:
    status: str
    split: Optional[Tuple[int, int]] = None


def rule_out_trivial_split(p: HybridParams) -> SplitResult:
    """
    Can a separate [[n1,k,d]] quantum code next to an [n2,m,c] classical code reach p?
    Only the two Singleton bounds are consulted, a surviving split is not a construction.
    """
    if p.k == 0 or p.m == 0:
        return SplitResult(NOT_APPLICABLE)
    _require_bounded(p, "d", "c")
    for n1 in range(p.n + 1):
        n2 = p.n - n1
        if quantum_singleton(n1, p.k, p.d) and classical_singleton(n2, p.m, p.c):
            return SplitResult(NOT_RULED_OUT, (n1, n2))
    return SplitResult(RULED_OUT)


def trade_quantum_for_classical(p: HybridParams) -> HybridParams:
    """Give up one quantum qudit for one classical qudit: [[n,k-1:m+1,d:min(c,d)]]."""
    if p.k < 1:
        raise ValueError("no quantum qudit to trade in %s" % p)
    _require_bounded(p, "d", "c")
    return HybridParams(p.n, p.k - 1, p.m + 1, p.d, min(p.c, p.d), p.q)


def compare_with_known(p: HybridParams, known=None):
    known = KNOWN_LENGTH_9 if known is None else known
    return [(name, params_preceq(p, other)) for name, other in known if other.n == p.n and other.q == p.q]
