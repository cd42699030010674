"""Command line front end.

Exit status: 0 when every requested check is verified, 1 when a check fails
(witnesses are in the output), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile

from . import __version__
from .bott import (
    GLWeight,
    GrassContext,
    InvalidBundle,
    TwistedSchurBundle,
    bott,
    bundle_weight,
)
from .partitions import Partition, PartitionBox, enumerate_box
from .schur import lr_coefficient_oracle, lr_expand, schur_dim
from .verifier import (
    VERIFIED,
    VerificationReport,
    enumerate_summands,
    example_grass24_analysis,
    report_all,
    summand_rank,
    sweep_prop3,
    verify_generation_order,
    verify_kapranov,
    verify_prop3,
    verify_tilting_ext,
)

log = logging.getLogger("grasstilt")

DISCLAIMER = (
    "Cohomology computed by Borel-Weil-Bott, valid over fields of characteristic 0 only."
)


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasstilt",
        description="Schur calculus, Bott cohomology and tilting checks on Grassmannians.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--out", metavar="FILE", help="write the document to FILE atomically")
    common.add_argument("-v", "--verbose", action="store_true")

    grass = argparse.ArgumentParser(add_help=False)
    grass.add_argument("--l", type=int, required=True)
    grass.add_argument("--m", type=int, required=True)

    checks = argparse.ArgumentParser(add_help=False)
    checks.add_argument(
        "--lower",
        type=int,
        choices=[0, 1],
        default=0,
        help="smallest allowed exterior degree in a summand (default 0)",
    )
    checks.add_argument("--parallelism", type=_positive, default=1)
    checks.add_argument("--timing", action="store_true", help="record elapsed_ms in reports")

    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("box", parents=[common], help="partitions inside a box")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson product")
    p.add_argument("--a", type=_partition, required=True)
    p.add_argument("--b", type=_partition, required=True)
    p.add_argument("--rank", type=_positive, help="drop partitions with more rows")
    p.add_argument("--g", type=_partition, help="also count tableaux for this shape by brute force")

    p = sub.add_parser("dim", parents=[common], help="dimension of a Schur module")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("bott", parents=[common, grass], help="cohomology of one homogeneous bundle")
    p.add_argument("--weight", help="e.g. '1,-1|0,0' or '1,-1,0,0'")
    p.add_argument("--gamma", type=_partition)
    p.add_argument("--k", type=int, default=0, help="determinant twist (det Q)^-k")
    p.add_argument("--r-part", type=_partition, default=Partition())

    p = sub.add_parser("summands", parents=[common, grass], help="exterior sequences of the bundle")
    p.add_argument("--lower", type=int, choices=[0, 1], default=0)

    p = sub.add_parser("verify-ext", parents=[common, grass, checks], help="Ext vanishing between summands")
    p.add_argument("--max-degree", type=int)

    p = sub.add_parser("verify-prop3", parents=[common, grass, checks], help="higher cohomology of duals times L_gamma Q")
    p.add_argument("--useq", type=_int_list, help="single check for this sequence (needs --gamma)")
    p.add_argument("--gamma", type=_partition)
    p.add_argument("--gamma-cols", type=int, help="sweep gamma over the box (l, gamma-cols); default 2(m-l)")

    sub.add_parser("verify-generation", parents=[common, grass, checks], help="lexicographic generation")
    sub.add_parser("kapranov", parents=[common, grass, checks], help="support of the characteristic-0 decomposition")
    sub.add_parser("example-2-4", parents=[common, checks], help="characteristic-free inputs on Grass(2,4)")

    p = sub.add_parser("report-all", parents=[common, grass, checks], help="every check, one document")
    p.add_argument("--gamma-cols", type=int)
    return parser


def _context(args) -> GrassContext:
    return GrassContext(args.l, args.m)


def _report_doc(report: VerificationReport) -> dict:
    return report.to_json()


def _run(args) -> tuple[dict, bool]:
    cmd = args.command
    if cmd == "box":
        if args.rows < 0 or args.cols < 0:
            raise UsageError("box dimensions must be non-negative")
        parts = enumerate_box(PartitionBox(args.rows, args.cols))
        return {"box": [args.rows, args.cols], "count": len(parts), "partitions": [list(p) for p in parts]}, True
    if cmd == "lr":
        expansion = lr_expand(args.a, args.b, args.rank)
        doc = {"a": list(args.a), "b": list(args.b), "rank_bound": args.rank, "terms": expansion.to_json()}
        if args.g is not None:
            doc["g"] = list(args.g)
            doc["oracle_coefficient"] = lr_coefficient_oracle(args.a, args.b, args.g)
            doc["expansion_coefficient"] = expansion[args.g]
            return doc, doc["oracle_coefficient"] == doc["expansion_coefficient"] or args.rank is not None
        return doc, True
    if cmd == "dim":
        return {"partition": list(args.partition), "n": args.n, "dimension": schur_dim(args.partition, args.n)}, True
    if cmd == "bott":
        ctx = _context(args)
        if args.weight is not None:
            if args.gamma is not None:
                raise UsageError("give either --weight or --gamma, not both")
            weight = GLWeight.parse(args.weight, ctx.l)
        elif args.gamma is not None:
            weight = bundle_weight(ctx, TwistedSchurBundle(args.gamma, args.k, args.r_part))
        else:
            raise UsageError("bott needs --weight or --gamma")
        table = bott(ctx, weight)
        return {
            "context": ctx.to_json(),
            "weight": list(weight.entries),
            "cohomology": table.to_json(),
            "characteristic": "0",
        }, True
    if cmd == "summands":
        ctx = _context(args)
        seqs = enumerate_summands(ctx, args.lower)
        return {
            "context": ctx.to_json(),
            "lower": args.lower,
            "count": len(seqs),
            "summands": [{"useq": list(s), "rank": summand_rank(ctx, s)} for s in seqs],
        }, True

    timing = args.timing
    if cmd == "verify-ext":
        r = verify_tilting_ext(_context(args), args.max_degree, lower=args.lower, parallelism=args.parallelism, timing=timing)
        return _report_doc(r), r.ok
    if cmd == "verify-prop3":
        ctx = _context(args)
        if args.useq is not None:
            if args.gamma is None:
                raise UsageError("--useq needs --gamma")
            ok, table = verify_prop3(ctx, args.useq, args.gamma)
            return {
                "context": ctx.to_json(),
                "check": "prop3_single",
                "useq": args.useq,
                "gamma": list(args.gamma),
                "verdict": VERIFIED if ok else "failed",
                "cohomology": table.to_json(),
                "characteristic": "0",
            }, ok
        r = sweep_prop3(ctx, args.gamma_cols, parallelism=args.parallelism, timing=timing)
        return _report_doc(r), r.ok
    if cmd == "verify-generation":
        r = verify_generation_order(_context(args), lower=args.lower, timing=timing)
        return _report_doc(r), r.ok
    if cmd == "kapranov":
        r = verify_kapranov(_context(args), lower=args.lower, timing=timing)
        return _report_doc(r), r.ok
    if cmd == "example-2-4":
        r = example_grass24_analysis(timing=timing)
        return _report_doc(r), r.ok
    if cmd == "report-all":
        ctx = _context(args)
        reports = report_all(ctx, args.lower, args.gamma_cols, args.parallelism, timing)
        ok = all(r.ok for r in reports)
        return {
            "version": __version__,
            "context": ctx.to_json(),
            "lower": args.lower,
            "characteristic": "0",
            "disclaimer": DISCLAIMER,
            "verdict": VERIFIED if ok else "failed",
            "sections": [r.to_json() for r in reports],
        }, ok
    raise UsageError(f"unknown command {cmd!r}")


def render_table(doc: dict) -> str:
    """Plain-text rendering for humans; JSON is the stable format."""
    lines = []
    if "sections" in doc:
        lines.append(f"Grass({doc['context']['l']},{doc['context']['m']})  lower={doc['lower']}  {doc['verdict']}")
        for sec in doc["sections"]:
            lines.append(f"  {sec['check']:<18} {sec['verdict']}")
        lines.append(doc["disclaimer"])
    elif "check" in doc:
        lines.append(f"{doc['check']}: {doc['verdict']}")
        for w in doc.get("witnesses", []):
            lines.append(f"  witness: {json.dumps(w)}")
        hom = doc.get("tables", {}).get("hom_matrix")
        if hom:
            lines.append("  hom matrix:")
            lines.extend("    " + " ".join(f"{x:>4}" for x in row) for row in hom)
    elif "cohomology" in doc:
        coh = doc["cohomology"]
        if not coh:
            lines.append("all cohomology vanishes")
        for d, row in coh.items():
            weights = ", ".join(f"{r['multiplicity']}x{tuple(r['weight'])}" for r in row["weights"])
            lines.append(f"H^{d}: dim {row['dimension']}  [{weights}]")
    elif "partitions" in doc:
        lines.append(f"{doc['count']} partitions")
        lines.extend(str(tuple(p)) for p in doc["partitions"])
    elif "terms" in doc:
        lines.extend(f"{t['multiplicity']:>4}  {tuple(t['partition'])}" for t in doc["terms"])
    elif "summands" in doc:
        lines.extend(f"{tuple(s['useq'])}  rank {s['rank']}" for s in doc["summands"])
    else:
        lines.extend(f"{k}: {v}" for k, v in doc.items())
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".grasstilt-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _glue_values(argv: list[str]) -> list[str]:
    # "--weight -1,0" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--weight", "--gamma", "--a", "--b", "--g", "--partition", "--useq") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_values(argv))
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        doc, ok = _run(args)
    except (UsageError, InvalidBundle, ValueError) as exc:
        print(f"grasstilt: error: {exc}", file=sys.stderr)
        return 2

    text = json.dumps(doc, indent=2) + "\n" if args.format == "json" else render_table(doc)
    if args.out:
        write_atomic(args.out, text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)
    if not ok:
        print("grasstilt: at least one check failed", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
