"""Checks of the tilting bundle on Grass(l, m), built from exterior powers of Q.

The bundle is the direct sum over weakly decreasing sequences
``l >= u_1 >= ... >= u_{m-l} >= lower`` of ``/\\^{u_1} Q (x) ... (x) /\\^{u_{m-l}} Q``.
``lower=0`` (the default) includes sequences with trailing zeros, that is,
products of fewer than ``m - l`` exterior powers; ``lower=1`` keeps only
products of exactly ``m - l`` nontrivial factors.  Every check reports which
convention it ran under.

All cohomology is computed by :func:`grasstilt.bott.bott` and so is a
characteristic-0 statement.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb, prod
from typing import Callable, Iterable, Sequence

from .bott import (
    CohomologyTable,
    GLWeight,
    GrassContext,
    TwistedSchurBundle,
    bott,
    bundle_cohomology,
    bundle_weight,
    schur_sum_cohomology,
)
from .partitions import EMPTY, Partition, conjugate, enumerate_box, lex_compare
from .schur import VirtualSchurSum, exterior_product_character, lr_expand, schur_dim

VERIFIED = "verified"
FAILED = "failed"
OUT_OF_SCOPE = "out_of_scope"


@dataclass
class VerificationReport:
    context: dict
    check: str
    verdict: str
    witnesses: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    elapsed_ms: float | None = None
    characteristic: str = "0"

    def __post_init__(self):
        if self.verdict == VERIFIED and self.witnesses:
            raise ValueError("a verified report cannot carry failure witnesses")

    @property
    def ok(self) -> bool:
        return self.verdict == VERIFIED

    def to_json(self) -> dict:
        return {
            "context": self.context,
            "check": self.check,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "tables": self.tables,
            "elapsed_ms": self.elapsed_ms,
            "characteristic": self.characteristic,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        return cls(**data)


def _verdict(witnesses: list) -> str:
    return FAILED if witnesses else VERIFIED


def _timed(fn: Callable[..., VerificationReport]):
    def wrapper(*args, timing: bool = True, **kwargs) -> VerificationReport:
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        if timing:
            report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def _run_jobs(fn, jobs: Sequence, parallelism: int) -> list:
    """Run independent jobs, returning results in job order."""
    if parallelism <= 1 or len(jobs) < 2:
        return [fn(job) for job in jobs]
    chunk = max(1, len(jobs) // (4 * parallelism))
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, jobs, chunksize=chunk))


# -- summands ------------------------------------------------------------------


def check_sequence(ctx: GrassContext, useq: Sequence[int], lower: int = 0) -> tuple[int, ...]:
    useq = tuple(int(u) for u in useq)
    if len(useq) != ctx.rank_r:
        raise ValueError(f"sequence {useq} must have m-l={ctx.rank_r} entries")
    if any(not lower <= u <= ctx.l for u in useq):
        raise ValueError(f"entries of {useq} must lie in [{lower}, {ctx.l}]")
    if any(x < y for x, y in zip(useq, useq[1:])):
        raise ValueError(f"sequence {useq} is not weakly decreasing")
    return useq


def enumerate_summands(ctx: GrassContext, lower: int = 0) -> list[tuple[int, ...]]:
    """Exterior sequences indexing the summands, lexicographically descending.

    There are ``binomial(m, l)`` of them for ``lower=0`` and
    ``binomial(m-1, l-1)`` for ``lower=1``.
    """
    if lower not in (0, 1):
        raise ValueError(f"lower must be 0 or 1, got {lower}")
    shifted = enumerate_box((ctx.rank_r, ctx.l - lower))
    return [tuple(x + lower for x in p.padded(ctx.rank_r)) for p in shifted]


def summand_rank(ctx: GrassContext, useq: Sequence[int]) -> int:
    return prod(comb(ctx.l, u) for u in useq)


def summand_character(ctx: GrassContext, useq: Sequence[int]) -> VirtualSchurSum:
    return exterior_product_character(useq, ctx.l)


def dual_summand_decompose(ctx: GrassContext, useq: Sequence[int]) -> list[tuple[TwistedSchurBundle, int]]:
    """Decompose the dual of a summand into twisted Schur bundles.

    Uses ``(/\\^u Q)^vee = /\\^(l-u) Q (x) (det Q)^(-1)`` on each factor, so the
    twist equals the number of factors.
    """
    k = len(useq)
    char = exterior_product_character([ctx.l - u for u in useq], ctx.l)
    return [(TwistedSchurBundle(g, k), c) for g, c in char.items()]


def _dual_character(ctx: GrassContext, useq: Sequence[int]) -> tuple[VirtualSchurSum, int]:
    return exterior_product_character([ctx.l - u for u in useq], ctx.l), len(useq)


# -- higher cohomology of duals of summands times L_gamma Q ---------------------


def prop3_table(ctx: GrassContext, useq: Sequence[int], gamma) -> CohomologyTable:
    """Cohomology of ``(/\\^{u_1} Q)^vee (x) ... (x) L_gamma Q``."""
    gamma = Partition(gamma)
    if len(gamma) > ctx.l:
        raise ValueError(f"gamma={list(gamma)} has more than l={ctx.l} rows")
    if any(not 0 <= u <= ctx.l for u in useq):
        raise ValueError(f"entries of {tuple(useq)} must lie in [0, {ctx.l}]")
    dual, k = _dual_character(ctx, useq)
    return schur_sum_cohomology(ctx, dual * VirtualSchurSum.single(gamma, ctx.l), k)


def verify_prop3(ctx: GrassContext, useq: Sequence[int], gamma) -> tuple[bool, CohomologyTable]:
    """True iff every degree ``i > 0`` vanishes; the table is the witness."""
    table = prop3_table(ctx, useq, gamma)
    return table.higher_vanishes(), table


def reduced_weight(ctx: GrassContext, gamma) -> GLWeight:
    """``L_gamma Q (x) (/\\^{m-l} R)^{(x)(m-l)}``, the case all ``u_j = l``.

    Equal to ``L_gamma Q (x) (det Q)^{-(m-l)}`` up to a power of ``det F``.
    """
    gamma = Partition(gamma)
    r = ctx.rank_r
    return GLWeight(gamma.padded(ctx.l) + (r,) * r, ctx.l)


def _prop3_job(job) -> tuple:
    ctx, useq, gamma = job
    ok, table = verify_prop3(ctx, useq, gamma)
    return ok, table.dimensions()


@_timed
def sweep_prop3(ctx: GrassContext, gamma_cols: int | None = None, parallelism: int = 1) -> VerificationReport:
    """Every ``u`` in ``[0, l]^(m-l)`` against every ``gamma`` in the box ``(l, gamma_cols)``.

    ``gamma_cols`` defaults to ``2(m-l)``.  Sequences are swept in every order
    even though the tensor product does not depend on it.
    """
    cols = 2 * ctx.rank_r if gamma_cols is None else gamma_cols
    gammas = enumerate_box((ctx.l, cols))
    seqs = list(product(range(ctx.l + 1), repeat=ctx.rank_r))
    # order of factors is irrelevant, so compute each multiset once
    keys = sorted({tuple(sorted(s, reverse=True)) for s in seqs}, reverse=True)
    jobs = [(ctx, s, g) for s in keys for g in gammas]
    results = dict(zip(((s, g) for _, s, g in jobs), _run_jobs(_prop3_job, jobs, parallelism)))

    witnesses = []
    for s in seqs:
        for g in gammas:
            ok, dims = results[(tuple(sorted(s, reverse=True)), g)]
            if not ok:
                witnesses.append({"useq": list(s), "gamma": list(g), "dimensions": _dims_json(dims)})

    # the reduced case: dominant iff gamma_l >= m-l, otherwise nothing survives
    reduction = {"dominant": 0, "all_vanish": 0}
    for g in gammas:
        w = reduced_weight(ctx, g)
        table = bott(ctx, w)
        if g.padded(ctx.l)[-1] >= ctx.rank_r:
            reduction["dominant"] += 1
            if not (w.is_dominant() and table.degrees() == [0]):
                witnesses.append({"reduced_gamma": list(g), "expected": "degree 0 only"})
        else:
            reduction["all_vanish"] += 1
            if not table.is_zero():
                witnesses.append({"reduced_gamma": list(g), "expected": "all degrees vanish"})
        twisted = bott(ctx, bundle_weight(ctx, TwistedSchurBundle(g, ctx.rank_r)))
        if twisted.dimensions() != table.dimensions():
            witnesses.append({"reduced_gamma": list(g), "expected": "det F twist invariance"})

    tables = {
        "gamma_box": [ctx.l, cols],
        "sequences": len(seqs),
        "gammas": len(gammas),
        "checks": len(seqs) * len(gammas),
        "reduced_case": reduction,
    }
    return VerificationReport(ctx.to_json(), "prop3", _verdict(witnesses), witnesses, tables)


# -- Ext vanishing between summands --------------------------------------------


def pair_table(ctx: GrassContext, a: Sequence[int], b: Sequence[int]) -> CohomologyTable:
    """Cohomology of ``T_a^vee (x) T_b``, i.e. ``Ext^*(T_a, T_b)``."""
    dual, k = _dual_character(ctx, a)
    return schur_sum_cohomology(ctx, dual * exterior_product_character(b, ctx.l), k)


def _pair_job(job) -> dict[int, int]:
    ctx, a, b = job
    return pair_table(ctx, a, b).dimensions()


def _dims_json(dims: dict[int, int]) -> dict[str, int]:
    return {str(d): v for d, v in sorted(dims.items())}


@_timed
def verify_tilting_ext(
    ctx: GrassContext,
    max_checked_degree: int | None = None,
    lower: int = 0,
    parallelism: int = 1,
) -> VerificationReport:
    """``Ext^i(T_a, T_b) = 0`` for all summand pairs and ``1 <= i <= max_checked_degree``.

    ``tables["hom_matrix"][i][j]`` is ``dim Hom(T_i, T_j)`` in summand order.
    """
    top = ctx.dim if max_checked_degree is None else min(max_checked_degree, ctx.dim)
    summands = enumerate_summands(ctx, lower)
    jobs = [(ctx, a, b) for a in summands for b in summands]
    dims = _run_jobs(_pair_job, jobs, parallelism)

    n = len(summands)
    hom = [[0] * n for _ in range(n)]
    witnesses = []
    for idx, d in enumerate(dims):
        i, j = divmod(idx, n)
        hom[i][j] = d.get(0, 0)
        bad = {deg: v for deg, v in d.items() if 1 <= deg <= top}
        if bad:
            witnesses.append({"pair": [list(summands[i]), list(summands[j])], "dimensions": _dims_json(bad)})
    for i in range(n):
        if hom[i][i] < 1:
            witnesses.append({"pair": [list(summands[i])] * 2, "problem": "no identity endomorphism"})

    tables = {
        "lower": lower,
        "summands": [list(s) for s in summands],
        "summand_ranks": [summand_rank(ctx, s) for s in summands],
        "pairs": n * n,
        "checked_degrees": [1, top],
        "hom_matrix": hom,
        "endomorphism_algebra_dim": sum(map(sum, hom)),
    }
    return VerificationReport(ctx.to_json(), "tilting_ext", _verdict(witnesses), witnesses, tables)


# -- generation ------------------------------------------------------------------


def conjugate_sequence(ctx: GrassContext, alpha) -> tuple[int, ...]:
    """Conjugate of ``alpha``, zero padded to ``m - l`` exterior factors."""
    abar = conjugate(Partition(alpha))
    return abar.padded(ctx.rank_r)


@_timed
def verify_generation_order(ctx: GrassContext, lower: int = 0) -> VerificationReport:
    """The lexicographic induction that puts each ``L_alpha Q`` in the thick closure.

    For ``alpha`` in the box ``(l, m-l)``, taken smallest first, the product of
    exterior powers indexed by the conjugate of ``alpha`` must contain
    ``L_alpha Q`` exactly once, every other constituent must be
    lexicographically smaller (and so already generated), and the product must
    itself be a summand.
    """
    box = enumerate_box((ctx.l, ctx.rank_r))
    box_set = set(box)
    generated: set[Partition] = set()
    steps, witnesses = [], []
    for alpha in reversed(box):
        useq = conjugate_sequence(ctx, alpha)
        char = exterior_product_character(useq, ctx.l)
        others = [g for g in char.sorted_partitions() if g != alpha]
        coefficient = char[alpha]
        larger = [list(g) for g in others if lex_compare(g, alpha) >= 0]
        outside = [list(g) for g in others if g not in box_set]
        ungenerated = [list(g) for g in others if g not in generated]
        is_summand = all(lower <= u <= ctx.l for u in useq)
        step = {
            "alpha": list(alpha),
            "useq": list(useq),
            "coefficient": coefficient,
            "other_support": [list(g) for g in others],
            "is_summand": is_summand,
        }
        steps.append(step)
        problems = []
        if coefficient != 1:
            problems.append("coefficient != 1")
        if larger:
            problems.append("constituent not lex-smaller")
        if outside:
            problems.append("constituent outside box")
        if ungenerated:
            problems.append("constituent not yet generated")
        if not is_summand:
            problems.append("product is not a summand")
        if problems:
            witnesses.append({"alpha": list(alpha), "problems": problems})
        else:
            generated.add(alpha)

    tables = {
        "lower": lower,
        "box": [ctx.l, ctx.rank_r],
        "box_size": len(box),
        "generated": len(generated),
        "base_case": {"alpha": [], "useq": list(conjugate_sequence(ctx, EMPTY))},
        "steps": steps,
    }
    return VerificationReport(ctx.to_json(), "generation_order", _verdict(witnesses), witnesses, tables)


# -- Kapranov's collection ---------------------------------------------------------


def kapranov_decomposition(ctx: GrassContext, lower: int = 0) -> VirtualSchurSum:
    """Characteristic-0 decomposition of the whole bundle into ``L_alpha Q``."""
    total = VirtualSchurSum(rank_bound=ctx.l)
    for s in enumerate_summands(ctx, lower):
        total = total + exterior_product_character(s, ctx.l)
    return total


@_timed
def verify_kapranov(ctx: GrassContext, lower: int = 0) -> VerificationReport:
    """Support of the decomposition equals the box ``B_{l, m-l}``.

    The support under the other summand convention is reported alongside.
    """
    box = enumerate_box((ctx.l, ctx.rank_r))
    dec = kapranov_decomposition(ctx, lower)
    other = kapranov_decomposition(ctx, 1 - lower)
    support = dec.support()
    witnesses = []
    missing = [list(g) for g in box if g not in support]
    extra = [list(g) for g in dec.sorted_partitions() if g not in set(box)]
    if missing:
        witnesses.append({"missing_from_support": missing})
    if extra:
        witnesses.append({"outside_box": extra})
    full = Partition((ctx.rank_r,) * ctx.l)
    if dec[full] != 1:
        witnesses.append({"full_box_multiplicity": dec[full]})
    total_rank = sum(summand_rank(ctx, s) for s in enumerate_summands(ctx, lower))
    if dec.dimension(ctx.l) != total_rank:
        witnesses.append({"rank_mismatch": [dec.dimension(ctx.l), total_rank]})
    if not dec.is_effective():
        witnesses.append({"negative_multiplicity": True})

    tables = {
        "lower": lower,
        "box_size": len(box),
        "support_size": len(support),
        "total_rank": total_rank,
        "decomposition": dec.to_json(),
        "other_convention": {
            "lower": 1 - lower,
            "summands": len(enumerate_summands(ctx, 1 - lower)),
            "support_size": len(other),
            "support": [list(g) for g in other.sorted_partitions()],
        },
    }
    return VerificationReport(ctx.to_json(), "kapranov", _verdict(witnesses), witnesses, tables)


# -- Grass(2,4) in characteristic 2: the characteristic-free inputs ----------------


def _end_q_terms(ctx: GrassContext) -> list[tuple[TwistedSchurBundle, int]]:
    # Q^vee = Q (x) (det Q)^-1, so Q^vee (x) Q = (Q (x) Q) (x) (det Q)^-1
    square = lr_expand((1,), (1,), ctx.l)
    return [(TwistedSchurBundle(g, 1), c) for g, c in square.items()]


@_timed
def example_grass24_analysis() -> VerificationReport:
    """Dimension inputs of the non-split sequence ``0 -> /\\^2 Q -> Q (x) Q -> S_2 Q -> 0``.

    Checks that ``(/\\^2 Q)^vee (x) S_2 Q`` has no cohomology at all and that
    ``End(Q)`` is one-dimensional.  Non-splitness itself is a
    characteristic-2 statement and is reported as out of scope.
    """
    ctx = GrassContext(2, 4)
    witnesses = []

    twisted = bundle_cohomology(ctx, [(TwistedSchurBundle((2,), 1), 1)])
    if not twisted.is_zero():
        witnesses.append({"check": "dual_wedge2_times_sym2", "dimensions": _dims_json(twisted.dimensions())})

    end_q = bundle_cohomology(ctx, _end_q_terms(ctx))
    end_dims = end_q.dimensions()
    if end_dims != {0: 1}:
        witnesses.append({"check": "end_q", "dimensions": _dims_json(end_dims)})

    ranks = {"wedge2": schur_dim((1, 1), 2), "sym2": schur_dim((2,), 2), "q_tensor_q": schur_dim((1,), 2) ** 2}
    if ranks["wedge2"] + ranks["sym2"] != ranks["q_tensor_q"]:
        witnesses.append({"check": "rank_bookkeeping", "ranks": ranks})

    tables = {
        "dual_wedge2_times_sym2": {
            "weight": list(bundle_weight(ctx, TwistedSchurBundle((2,), 1)).entries),
            "cohomology": twisted.to_json(),
            "all_degrees_vanish": twisted.is_zero(),
            "degrees_checked": [0, ctx.dim],
        },
        "end_q": {
            "decomposition": [
                {"bundle": b.to_json(), "multiplicity": c}
                for b, c in _end_q_terms(ctx)
            ],
            "cohomology": end_q.to_json(),
        },
        "rank_bookkeeping": ranks,
        "nonsplit_in_char_2": OUT_OF_SCOPE,
    }
    return VerificationReport(ctx.to_json(), "example_grass24", _verdict(witnesses), witnesses, tables)


# -- everything ---------------------------------------------------------------------


def report_all(
    ctx: GrassContext,
    lower: int = 0,
    gamma_cols: int | None = None,
    parallelism: int = 1,
    timing: bool = True,
) -> list[VerificationReport]:
    return [
        verify_tilting_ext(ctx, lower=lower, parallelism=parallelism, timing=timing),
        sweep_prop3(ctx, gamma_cols, parallelism=parallelism, timing=timing),
        verify_generation_order(ctx, lower=lower, timing=timing),
        verify_kapranov(ctx, lower=lower, timing=timing),
        example_grass24_analysis(timing=timing),
    ]


def all_verified(reports: Iterable[VerificationReport]) -> bool:
    return all(r.ok for r in reports)
