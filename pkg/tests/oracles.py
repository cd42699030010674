"""Brute-force references that share no code with the package."""

from fractions import Fraction
from itertools import product


def conjugate_by_cells(parts):
    cells = {(r, c) for r, p in enumerate(parts) for c in range(p)}
    cols = {}
    for r, c in cells:
        cols[c] = cols.get(c, 0) + 1
    return tuple(sorted(cols.values(), reverse=True))


def ssyt_count(shape, n):
    """Semistandard tableaux of ``shape`` with entries in ``1..n``."""
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    count = 0
    for values in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if all(
            (c == 0 or t[(r, c - 1)] <= v) and (r == 0 or t[(r - 1, c)] < v)
            for (r, c), v in t.items()
        ):
            count += 1
    return count


def weyl_dim(weight):
    """Weyl dimension formula for a dominant ``GL(m)`` weight."""
    m = len(weight)
    d = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            d *= Fraction(weight[i] - weight[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def prefix_dominates(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return all(sum(a[: k + 1]) >= sum(b[: k + 1]) for k in range(n))


def all_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in all_partitions(n - first, first)]
    return out
