"""Character-level Schur calculus.

Littlewood-Richardson products, the column Pieri rule, tensor products of
exterior powers, and exact dimensions of Schur modules.  Everything here is
exact integer arithmetic on formal sums of partitions.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Iterable, Iterator, Mapping

from .partitions import EMPTY, Partition, contains


class VirtualSchurSum:
    """Formal integer combination of Schur functors ``sum c_g L_g``.

    Zero coefficients are never stored.  With ``rank_bound=n`` the sum lives
    in the representation ring of a rank ``n`` space, where ``L_g`` vanishes
    whenever ``g`` has more than ``n`` rows; such terms are dropped on entry.
    """

    __slots__ = ("terms", "rank_bound")

    def __init__(self, terms: Mapping | Iterable = (), rank_bound: int | None = None):
        if rank_bound is not None and rank_bound < 1:
            raise ValueError(f"rank_bound must be positive, got {rank_bound}")
        self.rank_bound = rank_bound
        self.terms: dict[Partition, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for g, c in items:
            self.add_term(Partition(g), c)

    def add_term(self, g: Partition, c: int) -> None:
        if self.rank_bound is not None and len(g) > self.rank_bound:
            return
        c = self.terms.get(g, 0) + c
        if c:
            self.terms[g] = c
        else:
            self.terms.pop(g, None)

    @classmethod
    def single(cls, g, rank_bound: int | None = None) -> "VirtualSchurSum":
        return cls({Partition(g): 1}, rank_bound)

    def __getitem__(self, g) -> int:
        return self.terms.get(Partition(g), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.sorted_partitions())

    def items(self) -> list[tuple[Partition, int]]:
        return [(g, self.terms[g]) for g in self.sorted_partitions()]

    def sorted_partitions(self) -> list[Partition]:
        """Partitions in the support, lexicographically descending."""
        return sorted(self.terms, reverse=True)

    def support(self) -> set[Partition]:
        return set(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, VirtualSchurSum):
            return self.terms == other.terms
        if isinstance(other, Mapping):
            return self.terms == {Partition(g): c for g, c in other.items() if c}
        return NotImplemented

    def __add__(self, other: "VirtualSchurSum") -> "VirtualSchurSum":
        out = VirtualSchurSum(self.terms, _meet(self.rank_bound, other.rank_bound))
        for g, c in other.terms.items():
            out.add_term(g, c)
        return out

    def __neg__(self) -> "VirtualSchurSum":
        return self.scale(-1)

    def __sub__(self, other: "VirtualSchurSum") -> "VirtualSchurSum":
        return self + (-other)

    def scale(self, k: int) -> "VirtualSchurSum":
        return VirtualSchurSum({g: k * c for g, c in self.terms.items()}, self.rank_bound)

    def __mul__(self, other: "VirtualSchurSum") -> "VirtualSchurSum":
        n = _meet(self.rank_bound, other.rank_bound)
        out = VirtualSchurSum(rank_bound=n)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for g, c in lr_expand(a, b, n).terms.items():
                    out.add_term(g, ca * cb * c)
        return out

    def dimension(self, n: int | None = None) -> int:
        """Dimension of the virtual module over a rank-``n`` space."""
        n = self.rank_bound if n is None else n
        if n is None:
            raise ValueError("dimension needs a rank")
        return sum(c * schur_dim(g, n) for g, c in self.terms.items())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def to_json(self) -> list[dict]:
        return [{"partition": list(g), "multiplicity": c} for g, c in self.items()]

    @classmethod
    def from_json(cls, data, rank_bound: int | None = None) -> "VirtualSchurSum":
        return cls(((rec["partition"], rec["multiplicity"]) for rec in data), rank_bound)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{list(g)}" for g, c in self.items()) or "0"
        return f"VirtualSchurSum({body}, rank_bound={self.rank_bound})"


def _meet(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# -- brute force ------------------------------------------------------------


def lr_coefficient_oracle(a, b, g) -> int:
    """Count Littlewood-Richardson tableaux of shape ``g/a`` and content ``b``.

    Walks every semistandard filling of the skew shape with the right content
    and keeps those whose reverse reading word (rows top to bottom, each row
    right to left) is a lattice word.  Slow, but shares no code with
    :func:`lr_expand`.
    """
    a, b, g = Partition(a), Partition(b), Partition(g)
    if g.size != a.size + b.size or not contains(g, a) or not contains(g, b):
        return 0
    ap = a.padded(len(g))
    cells = [(r, c) for r in range(len(g)) for c in range(ap[r], g[r])]
    filling: dict[tuple[int, int], int] = {}
    remaining = list(b)
    count = 0

    def lattice() -> bool:
        seen = [0] * (len(b) + 1)
        for r in range(len(g)):
            for c in range(g[r] - 1, ap[r] - 1, -1):
                v = filling[(r, c)]
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    return False
        return True

    def place(k: int) -> None:
        nonlocal count
        if k == len(cells):
            if lattice():
                count += 1
            return
        r, c = cells[k]
        for v in range(1, len(b) + 1):
            if not remaining[v - 1]:
                continue
            left = filling.get((r, c - 1))
            if left is not None and left > v:
                continue
            above = filling.get((r - 1, c))
            if above is not None and above >= v:
                continue
            filling[(r, c)] = v
            remaining[v - 1] -= 1
            place(k + 1)
            remaining[v - 1] += 1
            del filling[(r, c)]

    place(0)
    return count


# -- fast expansion ----------------------------------------------------------


def _strips(shape: tuple[int, ...], size: int, prev: tuple[int, ...] | None, maxrows: int):
    """Horizontal strips of ``size`` boxes on ``shape`` obeying the lattice bound.

    ``prev[r]`` is how many boxes the previous letter put in row ``r``; the
    new letter may occupy at most ``sum(prev[:r])`` boxes among rows ``<= r``.
    Yields per-row box counts.
    """
    nrows = min(len(shape) + 1, maxrows)
    row = lambda r: shape[r] if r < len(shape) else 0  # noqa: E731
    counts = [0] * nrows

    def rec(r: int, remaining: int, added: int, allowed: int):
        if remaining == 0:
            yield tuple(counts)
            return
        if r == nrows:
            return
        cap = remaining if r == 0 else min(remaining, row(r - 1) - row(r))
        if prev is not None:
            cap = min(cap, allowed - added)
        nxt = allowed + (prev[r] if prev is not None and r < len(prev) else 0)
        for x in range(cap, -1, -1):
            counts[r] = x
            yield from rec(r + 1, remaining - x, added + x, nxt)
        counts[r] = 0

    yield from rec(0, size, 0, 0)


@lru_cache(maxsize=None)
def _lr_terms(a: Partition, b: Partition, maxrows: int) -> tuple[tuple[Partition, int], ...]:
    out: dict[Partition, int] = {}

    def grow(shape: tuple[int, ...], v: int, prev: tuple[int, ...] | None):
        if v == len(b):
            g = Partition(shape)
            out[g] = out.get(g, 0) + 1
            return
        for counts in _strips(shape, b[v], prev, maxrows):
            new = [shape[r] if r < len(shape) else 0 for r in range(max(len(shape), len(counts)))]
            for r, x in enumerate(counts):
                new[r] += x
            while new and new[-1] == 0:
                new.pop()
            grow(tuple(new), v + 1, counts)

    grow(tuple(a), 0, None)
    return tuple(out.items())


def lr_expand(a, b, rank_bound: int | None = None) -> VirtualSchurSum:
    """Decompose ``L_a (x) L_b`` by the Littlewood-Richardson rule.

    Letters ``1..len(b)`` are laid down one horizontal strip at a time, and a
    strip is kept only if the reverse reading word stays a lattice word.  With
    a ``rank_bound`` no strip reaches below that row, which is the same as
    discarding longer partitions afterwards.
    """
    a, b = Partition(a), Partition(b)
    if rank_bound is not None and (len(a) > rank_bound or len(b) > rank_bound):
        return VirtualSchurSum(rank_bound=rank_bound)
    maxrows = len(a) + len(b) if rank_bound is None else rank_bound
    return VirtualSchurSum(dict(_lr_terms(a, b, maxrows)), rank_bound)


@lru_cache(maxsize=None)
def _vertical_strips(a: Partition, u: int, maxrows: int) -> tuple[Partition, ...]:
    rows = list(a.padded(min(len(a) + u, maxrows)))
    out = []
    for chosen in combinations(range(len(rows)), u):
        new = rows[:]
        for r in chosen:
            new[r] += 1
        if all(new[r - 1] >= new[r] for r in range(1, len(new))):
            out.append(Partition(new))
    return tuple(out)


def pieri_column(a, u: int, rank_bound: int | None = None) -> VirtualSchurSum:
    """``L_a (x) /\\^u``: add ``u`` boxes to ``a``, no two in one row."""
    a = Partition(a)
    if u < 0:
        raise ValueError(f"exterior degree must be non-negative, got {u}")
    if rank_bound is not None and len(a) > rank_bound:
        return VirtualSchurSum(rank_bound=rank_bound)
    maxrows = len(a) + u if rank_bound is None else rank_bound
    return VirtualSchurSum({g: 1 for g in _vertical_strips(a, u, maxrows)}, rank_bound)


def exterior_product_character(useq: Iterable[int], rank_bound: int) -> VirtualSchurSum:
    """Character of ``/\\^{u_1} E (x) ... (x) /\\^{u_k} E`` for ``E`` of rank ``rank_bound``."""
    useq = list(useq)
    for u in useq:
        if not 0 <= u <= rank_bound:
            raise ValueError(f"exterior degree {u} outside [0, {rank_bound}]")
    return VirtualSchurSum(dict(_exterior_cached(tuple(useq), rank_bound)), rank_bound)


@lru_cache(maxsize=4096)
def _exterior_cached(useq: tuple[int, ...], n: int) -> tuple[tuple[Partition, int], ...]:
    acc = {EMPTY: 1}
    for u in useq:
        nxt: dict[Partition, int] = {}
        for g, c in acc.items():
            for h in _vertical_strips(g, u, n):
                nxt[h] = nxt.get(h, 0) + c
        acc = nxt
    return tuple(acc.items())


def schur_dim(a, n: int) -> int:
    """Dimension of ``L_a`` of a rank-``n`` space, by the hook-content formula."""
    a = Partition(a)
    if len(a) > n:
        return 0
    conj = [sum(1 for p in a if p > j) for j in range(a[0])] if a else []
    num = prod(n + c - r for r in range(len(a)) for c in range(a[r]))
    den = prod(a[r] - c + conj[c] - r - 1 for r in range(len(a)) for c in range(a[r]))
    q, rem = divmod(num, den)
    assert rem == 0, (a, n)
    return q


def exterior_rank(useq: Iterable[int], n: int) -> int:
    """Rank of a tensor product of exterior powers of a rank-``n`` bundle."""
    return prod(comb(n, u) for u in useq)
