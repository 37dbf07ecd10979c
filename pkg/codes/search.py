"""
Weight-ordered search for the lightest Pauli operator that commutes with one set
of operators and fails to commute with at least one of a second set.

Set membership is phrased through commutation: E lies in the span V iff E
commutes with every element of the centralizer of V.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from algebra.pauli import PauliOperator, canonical
from algebra.symplectic import check_matrix
from config.qec_config import QecConfig
from utils.enumeration import chunked, colex_supports, letter_pairs

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    weight: Optional[int]
    witness: Optional[PauliOperator]
    max_weight: int

    @property
    def exact(self) -> bool:
        return self.weight is not None

    @property
    def bound(self) -> int:
        """The distance when exact, otherwise the lower bound max_weight + 1."""
        return self.weight if self.exact else self.max_weight + 1

    def __str__(self):
        if self.exact:
            return str(self.weight)
        return "> %d" % self.max_weight


class WeightSearch(object):
    def __init__(self, n, spec, zero_ops, nonzero_ops=(), config=None):
        """
        :param zero_ops: a hit commutes with all of these
        :param nonzero_ops: a hit fails to commute with at least one of these, no condition when empty
        """
        self.n = n
        self.spec = spec
        self.config = config or QecConfig()
        self.letters = letter_pairs(spec.q)
        self.n_zero = len(zero_ops)
        self.n_nonzero = len(nonzero_ops)
        checks = check_matrix(list(zero_ops) + list(nonzero_ops), spec, n)
        self.contrib = self._contributions(checks)

    def _contributions(self, checks):
        """contrib[j, L] = syndrome of letter L placed on qudit j."""
        spec, n, ell = self.spec, self.n, self.spec.ell
        coeffs = spec.coeff_table
        rows = checks.shape[0]
        contrib = np.zeros((n, len(self.letters), rows), dtype=np.int64)
        if rows == 0:
            return contrib
        for j in range(n):
            hx = checks[:, j * ell:(j + 1) * ell]
            hz = checks[:, n * ell + j * ell:n * ell + (j + 1) * ell]
            for idx, (a, b) in enumerate(self.letters):
                contrib[j, idx] = (hx @ coeffs[a] + hz @ coeffs[b]) % spec.p
        return contrib

    def _hits(self, syndromes):
        ok = ~syndromes[:, :self.n_zero].any(axis=1)
        if self.n_nonzero:
            ok &= syndromes[:, self.n_zero:].any(axis=1)
        return ok

    def letter_blocks(self, support):
        """
        Syndromes of every letter assignment on support, at most letter_block rows at a time.
        Yields (offset, syndromes); row r is assignment offset + r with support[0] most significant.
        """
        p = self.spec.p
        nl = len(self.letters)
        rows = self.contrib.shape[-1]
        limit = self.config.letter_block
        t = 0
        while t < len(support) and nl ** (t + 1) <= limit:
            t += 1
        head, tail = support[:len(support) - t], support[len(support) - t:]
        tail_acc = np.zeros((1, rows), dtype=np.int64)
        for j in tail:
            tail_acc = (tail_acc[:, None, :] + self.contrib[j][None, :, :]).reshape(-1, rows) % p
        offset = 0
        for batch in chunked(itertools.product(range(nl), repeat=len(head)), max(1, limit // tail_acc.shape[0])):
            letters = np.array(batch, dtype=np.int64).reshape(len(batch), len(head))
            head_acc = np.zeros((len(batch), rows), dtype=np.int64)
            for col, j in enumerate(head):
                head_acc += self.contrib[j][letters[:, col]]
            syndromes = (head_acc[:, None, :] + tail_acc[None, :, :]).reshape(-1, rows) % p
            yield offset, syndromes
            offset += syndromes.shape[0]

    def scan(self, supports):
        """First hit over supports in order, as (support, letter indices) or None."""
        nl = len(self.letters)
        for support in supports:
            for offset, syndromes in self.letter_blocks(support):
                hits = np.flatnonzero(self._hits(syndromes))
                if hits.size:
                    flat = offset + int(hits[0])
                    digits = []
                    for _ in support:
                        digits.append(flat % nl)
                        flat //= nl
                    return support, digits[::-1]
        return None

    def witness(self, support, digits) -> PauliOperator:
        x = [0] * self.n
        z = [0] * self.n
        for j, idx in zip(support, digits):
            x[j], z[j] = self.letters[idx]
        return canonical(PauliOperator(self.spec, x, z, 0))

    def run(self, max_weight, min_weight=1) -> SearchResult:
        config = self.config
        max_weight = min(int(max_weight), self.n)
        for w in tqdm(range(min_weight, max_weight + 1), desc="weight", disable=not config.verbose):
            supports = colex_supports(self.n, w)
            chunks = list(chunked(supports, config.chunk_size))
            if config.n_jobs == 1:
                found = None
                for chunk in chunks:
                    found = self.scan(chunk)
                    if found is not None:
                        break
            else:
                results = Parallel(n_jobs=config.n_jobs, prefer="threads")(
                    delayed(self.scan)(chunk) for chunk in chunks)
                found = next((r for r in results if r is not None), None)
            logger.debug("weight %d: %d supports, %s", w, len(supports), "hit" if found else "no hit")
            if found is not None:
                return SearchResult(w, self.witness(*found), max_weight)
        return SearchResult(None, None, max_weight)


def min_weight_search(n, spec, zero_ops, nonzero_ops=(), max_weight=None, config=None) -> SearchResult:
    config = config or QecConfig()
    if max_weight is None:
        max_weight = config.default_max_weight(n)
    return WeightSearch(n, spec, zero_ops, nonzero_ops, config).run(max_weight)
