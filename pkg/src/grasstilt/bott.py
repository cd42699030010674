"""Characteristic-zero cohomology of homogeneous bundles on Grass(l, m).

A bundle ``L_gamma Q (x) L_beta R (x) (det Q)^(-k)`` corresponds to the
``GL(m)`` weight ``(gamma - k | beta)``: the first ``l`` entries belong to the
rank-``l`` quotient ``Q``, the last ``m - l`` to the tautological subbundle
``R``.  With this convention ``H^0(L_gamma Q) = L_gamma F^vee``, of dimension
``schur_dim(gamma, m)``.  The cohomology is computed by the rho-shift
algorithm of Borel-Weil-Bott, which is only valid in characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping

from .partitions import EMPTY, Partition
from .schur import VirtualSchurSum, schur_dim


class InvalidBundle(ValueError):
    """A weight or bundle does not describe a homogeneous bundle on the Grassmannian."""


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian of ``l``-dimensional subspaces of an ``m``-dimensional space."""

    l: int  # noqa: E741
    m: int

    def __post_init__(self):
        if not 1 <= self.l < self.m:
            raise InvalidBundle(f"need 1 <= l < m, got l={self.l}, m={self.m}")

    @property
    def dim(self) -> int:
        return self.l * (self.m - self.l)

    @property
    def rank_r(self) -> int:
        return self.m - self.l

    @property
    def rho(self) -> tuple[int, ...]:
        return tuple(range(self.m - 1, -1, -1))

    def to_json(self) -> dict:
        return {"l": self.l, "m": self.m}


@dataclass(frozen=True)
class GLWeight:
    entries: tuple[int, ...]
    l: int  # noqa: E741

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def parse(cls, text: str, l: int | None = None) -> "GLWeight":  # noqa: E741
        """Parse ``"1,-1|0,0"`` (or ``"1,-1,0,0"`` when ``l`` is given)."""
        try:
            if "|" in text:
                q, r = text.split("|")
                qs = [int(t) for t in q.split(",") if t.strip()]
                rs = [int(t) for t in r.split(",") if t.strip()]
                if l is not None and len(qs) != l:
                    raise ValueError(f"Q-block has {len(qs)} entries, expected {l}")
                return cls(tuple(qs + rs), len(qs))
            if l is None:
                raise ValueError("need l or a '|' block separator")
            return cls(tuple(int(t) for t in text.split(",")), l)
        except ValueError as exc:
            raise InvalidBundle(f"malformed weight {text!r}: {exc}") from None

    @property
    def q_block(self) -> tuple[int, ...]:
        return self.entries[: self.l]

    @property
    def r_block(self) -> tuple[int, ...]:
        return self.entries[self.l :]

    def check(self, ctx: GrassContext) -> None:
        if len(self.entries) != ctx.m or self.l != ctx.l:
            raise InvalidBundle(f"weight {self} does not fit Grass({ctx.l},{ctx.m})")
        for block in (self.q_block, self.r_block):
            if any(x < y for x, y in zip(block, block[1:])):
                raise InvalidBundle(f"block {block} of {self} is not weakly decreasing")

    def is_dominant(self) -> bool:
        """Weakly decreasing across all ``m`` entries (Kempf's hypothesis)."""
        e = self.entries
        return all(x >= y for x, y in zip(e, e[1:]))

    def __str__(self) -> str:
        fmt = lambda b: ",".join(map(str, b))  # noqa: E731
        return f"({fmt(self.q_block)} | {fmt(self.r_block)})"


@dataclass(frozen=True)
class TwistedSchurBundle:
    """``L_gamma Q (x) L_r_part R (x) (det Q)^(-det_twist)``."""

    gamma: Partition = EMPTY
    det_twist: int = 0
    r_part: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "gamma", Partition(self.gamma))
        object.__setattr__(self, "r_part", Partition(self.r_part))

    def to_json(self) -> dict:
        return {"gamma": list(self.gamma), "det_twist": self.det_twist, "r_part": list(self.r_part)}


def bundle_weight(ctx: GrassContext, b: TwistedSchurBundle) -> GLWeight:
    if len(b.gamma) > ctx.l:
        raise InvalidBundle(f"gamma={list(b.gamma)} has more than l={ctx.l} rows")
    if len(b.r_part) > ctx.rank_r:
        raise InvalidBundle(f"r_part={list(b.r_part)} has more than m-l={ctx.rank_r} rows")
    q = tuple(g - b.det_twist for g in b.gamma.padded(ctx.l))
    return GLWeight(q + b.r_part.padded(ctx.rank_r), ctx.l)


def gl_dim(weight: Iterable[int]) -> int:
    """Dimension of the irreducible ``GL(m)`` module with dominant highest weight."""
    w = list(weight)
    shift = w[-1]
    return schur_dim(Partition(x - shift for x in w), len(w))


@dataclass
class CohomologyTable:
    """Degree -> virtual ``GL(m)`` module, recorded as dominant weight multiplicities."""

    m: int
    rows: dict[int, dict[tuple[int, ...], int]] = field(default_factory=dict)

    def add(self, degree: int, weight: tuple[int, ...], mult: int = 1) -> None:
        row = self.rows.setdefault(degree, {})
        c = row.get(weight, 0) + mult
        if c:
            row[weight] = c
        else:
            row.pop(weight)
            if not row:
                del self.rows[degree]

    def __iadd__(self, other: "CohomologyTable") -> "CohomologyTable":
        return self.merge(other)

    def merge(self, other: "CohomologyTable", mult: int = 1) -> "CohomologyTable":
        for d, row in other.rows.items():
            for w, c in row.items():
                self.add(d, w, mult * c)
        return self

    def degrees(self) -> list[int]:
        return sorted(self.rows)

    def dimension(self, degree: int) -> int:
        return sum(c * gl_dim(w) for w, c in self.rows.get(degree, {}).items())

    def dimensions(self) -> dict[int, int]:
        return {d: self.dimension(d) for d in self.degrees()}

    def is_zero(self) -> bool:
        return not self.rows

    def higher_vanishes(self) -> bool:
        return all(d == 0 for d in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return self.m == other.m and self.rows == other.rows

    def to_json(self) -> dict:
        out = {}
        for d in self.degrees():
            weights = sorted(self.rows[d].items(), reverse=True)
            out[str(d)] = {
                "dimension": self.dimension(d),
                "weights": [{"weight": list(w), "multiplicity": c} for w, c in weights],
            }
        return out

    @classmethod
    def from_json(cls, m: int, data: Mapping) -> "CohomologyTable":
        table = cls(m)
        for d, row in data.items():
            for rec in row["weights"]:
                table.add(int(d), tuple(rec["weight"]), rec["multiplicity"])
        return table


def bott(ctx: GrassContext, w: GLWeight) -> CohomologyTable:
    """Borel-Weil-Bott for a single irreducible homogeneous bundle.

    Add rho; a repeated entry means all cohomology vanishes.  Otherwise the
    only nonzero group sits in degree equal to the number of inversions of
    ``w + rho`` and has highest weight ``sort(w + rho) - rho``.
    """
    w.check(ctx)
    table = CohomologyTable(ctx.m)
    shifted = [x + r for x, r in zip(w.entries, ctx.rho)]
    if len(set(shifted)) < ctx.m:
        return table
    inversions = sum(
        1 for i in range(ctx.m) for j in range(i + 1, ctx.m) if shifted[i] < shifted[j]
    )
    top = sorted(shifted, reverse=True)
    table.add(inversions, tuple(x - r for x, r in zip(top, ctx.rho)))
    return table


def projective_line_bundle_oracle(n: int, d: int) -> CohomologyTable:
    """Closed-form cohomology of ``O(d)`` on ``P^(n-1)``.

    ``H^0 = S^d F^vee`` for ``d >= 0``; by Serre duality ``H^(n-1)`` is
    ``(S^(-d-n) F^vee)^vee (x) det^(-1)`` for ``d <= -n``; nothing otherwise.
    Dimensions are binomials, weights are written down directly.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    table = CohomologyTable(n)
    if d >= 0:
        table.add(0, (d,) + (0,) * (n - 1))
        assert table.dimension(0) == comb(d + n - 1, n - 1)
    elif d <= -n:
        table.add(n - 1, (-1,) * (n - 1) + (d + n - 1,))
        assert table.dimension(n - 1) == comb(-d - 1, n - 1)
    return table


def bundle_cohomology(ctx: GrassContext, terms) -> CohomologyTable:
    """Cohomology of an integer combination of :class:`TwistedSchurBundle`.

    ``terms`` is a mapping or an iterable of ``(bundle, multiplicity)``.
    """
    items = terms.items() if isinstance(terms, Mapping) else terms
    table = CohomologyTable(ctx.m)
    for b, c in items:
        if c:
            table.merge(bott(ctx, bundle_weight(ctx, b)), c)
    return table


def schur_sum_cohomology(
    ctx: GrassContext, q_part: VirtualSchurSum, det_twist: int = 0
) -> CohomologyTable:
    """Cohomology of ``(sum c_g L_g Q) (x) (det Q)^(-det_twist)``."""
    return bundle_cohomology(
        ctx, ((TwistedSchurBundle(g, det_twist), c) for g, c in q_part.items())
    )


def dual_weight(ctx: GrassContext, w: GLWeight) -> GLWeight:
    """Weight of the dual bundle: each block negated and reversed."""
    q = tuple(-x for x in reversed(w.q_block))
    r = tuple(-x for x in reversed(w.r_block))
    return GLWeight(q + r, ctx.l)


def canonical_weight(ctx: GrassContext) -> GLWeight:
    """The canonical bundle ``(det Q)^(-m)``."""
    return GLWeight((-ctx.m,) * ctx.l + (0,) * ctx.rank_r, ctx.l)


def serre_dual_weight(ctx: GrassContext, w: GLWeight) -> GLWeight:
    """Weight of ``E^vee (x) omega`` for the bundle ``E`` with weight ``w``."""
    d = dual_weight(ctx, w)
    k = canonical_weight(ctx)
    return GLWeight(tuple(x + y for x, y in zip(d.entries, k.entries)), ctx.l)
