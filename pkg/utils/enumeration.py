from itertools import combinations, islice


def colex_supports(n, w):
    """Size-w subsets of range(n) in colexicographic order."""
    return sorted(combinations(range(n), w), key=lambda c: c[::-1])


def chunked(items, size):
    items = iter(items)
    while True:
        chunk = list(islice(items, size))
        if not chunk:
            return
        yield chunk


def letter_pairs(q):
    """Nonidentity single-qudit letters (x, z) ordered by the code x + q * z."""
    return [(code % q, code // q) for code in range(1, q * q)]
