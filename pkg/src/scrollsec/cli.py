"""Command-line front end: classify | sample | atlas | oracle-check.

Reports are JSON on stdout (or --out), schema version 1, with homogeneous
coordinates emitted as decimal strings so no consumer is tempted to read field
elements as floats.  Identical configuration and seed produce byte-identical
reports.

Exit codes: 0 success/agreement, 2 unclassifiable signature data, 3 label
disagreement or failed verification, 64 usage/parse errors, 65 point on the
variety, 66 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .delpezzo import (
    atlas_enumerate,
    depth_predict,
    is_del_pezzo,
    locus_fills_ambient,
    sample_inside_locus,
    sample_outside_locus,
)
from .errors import (
    BudgetExceededError,
    PointOnVarietyError,
    ScrollParseError,
    ScrollsecError,
    UnclassifiableSignatureError,
)
from .exactfield import field_make, normalize_point
from .oracle import brute_membership, brute_secant_locus, check_lift_equalities
from .scroll import contains, parse_scroll, scroll_literal
from .secant import classify_with_data, secant_locus_points
from .strata import stratum_geometric

EXIT_OK = 0
EXIT_UNCLASSIFIABLE = 2
EXIT_DISAGREEMENT = 3
EXIT_USAGE = 64
EXIT_ON_VARIETY = 65
EXIT_BUDGET = 66

DEFAULT_Q = 10007
ORACLE_Q_MAX = 101


def _emit(report: dict, out_path: str | None) -> None:
    text = json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _coords_str(p) -> list:
    return [str(x) for x in p]


def _parse_point(text: str, ctx):
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ScrollParseError(f"bad point literal {text!r}") from exc
    vec = tuple(v % ctx.q for v in vals)
    if not any(vec):
        raise ScrollParseError("point literal is the zero vector")
    return normalize_point(ctx, vec)


def _classify_report(spec, ctx, p, d_max: int):
    sig, sec, quadric, sample = classify_with_data(spec, ctx, p, d_max)
    report = stratum_geometric(spec, ctx, p, d_max)
    in_sec = report.in_Sec
    depth = depth_predict(spec, sig, in_sec)
    return {
        "scroll": scroll_literal(spec),
        "point": _coords_str(p),
        "q": ctx.q,
        "s": sig.s,
        "rank": sig.rank,
        "label": sig.label,
        "dim_sigma": sig.locus_dim,
        "sec_dim": sig.sec_dim,
        "depth": depth.depth,
        "acm": depth.acm,
        "del_pezzo": is_del_pezzo(spec, sig),
        "del_pezzo_case": depth.del_pezzo_case,
        "linearly_normal": depth.linearly_normal,
        "memberships": {
            "A": report.in_A,
            "B": report.in_B,
            "U": report.in_U,
            "Tan": report.in_Tan,
            "Sec": report.in_Sec,
        },
        "label_geom": report.label_geom,
        "agreement": report.agrees_with_signature,
    }


def run_classify(args) -> int:
    spec = parse_scroll(args.scroll)
    ctx = field_make(args.q, 1)
    p = _parse_point(args.point, ctx)
    if len(p) != spec.ambient + 1:
        raise ScrollParseError(
            f"point has {len(p)} coordinates, ambient needs {spec.ambient + 1}"
        )
    if contains(spec, ctx, p):
        raise PointOnVarietyError("point lies on the scroll")
    try:
        result = _classify_report(spec, ctx, p, args.dmax)
    except UnclassifiableSignatureError as exc:
        _emit(
            {
                "schema": 1,
                "command": "classify",
                "error": "UnclassifiableSignature",
                "detail": str(exc),
                "s": exc.s,
                "rank": exc.rank,
            },
            args.out,
        )
        return EXIT_UNCLASSIFIABLE
    _emit({"schema": 1, "command": "classify", "result": result}, args.out)
    return EXIT_OK if result["agreement"] else EXIT_DISAGREEMENT


def _random_external_point(spec, ctx, rng):
    nv = spec.ambient + 1
    while True:
        p = tuple(ctx.rand(rng) for _ in range(nv))
        if not any(p):
            continue
        p = normalize_point(ctx, p)
        if not contains(spec, ctx, p):
            return p


def run_sample(args) -> int:
    spec = parse_scroll(args.scroll)
    ctx = field_make(args.q, 1)
    rng = random.Random(args.seed)
    census = {label: 0 for label in
              ("Empty2Z", "TwoPoints", "DoublePoint", "TwoLines", "Conic", "QuadricSurface")}
    disagreements = 0
    unclassifiable = 0
    for _ in range(args.n):
        p = _random_external_point(spec, ctx, rng)
        try:
            report = stratum_geometric(spec, ctx, p, args.dmax)
        except UnclassifiableSignatureError:
            unclassifiable += 1
            continue
        census[report.label_geom] += 1
        if not report.agrees_with_signature:
            disagreements += 1
    _emit(
        {
            "schema": 1,
            "command": "sample",
            "config": {
                "scroll": scroll_literal(spec),
                "q": ctx.q,
                "n": args.n,
                "seed": args.seed,
                "dmax": args.dmax,
            },
            "result": {
                "census": census,
                "agreement_failures": disagreements,
                "unclassifiable": unclassifiable,
            },
        },
        args.out,
    )
    if unclassifiable:
        return EXIT_UNCLASSIFIABLE
    return EXIT_OK if disagreements == 0 else EXIT_DISAGREEMENT


def run_atlas(args) -> int:
    ctx = field_make(args.q, 1)
    rng = random.Random(args.seed)
    entries = atlas_enumerate(args.max_deg, args.max_n, args.max_h)
    out_entries = []
    clean = True
    for entry in entries:
        spec = parse_scroll(entry.scroll)
        inside_ok = 0
        for _ in range(args.verify_samples):
            p = sample_inside_locus(entry.locus_kind, spec, ctx, rng)
            sig, _, _, _ = classify_with_data(spec, ctx, p, args.dmax)
            if is_del_pezzo(spec, sig):
                inside_ok += 1
        outside_acm = 0
        outside_total = 0
        if not locus_fills_ambient(entry.locus_kind, spec):
            for _ in range(args.verify_samples):
                p = sample_outside_locus(entry.locus_kind, spec, ctx, rng)
                outside_total += 1
                sig, _, _, _ = classify_with_data(spec, ctx, p, args.dmax)
                if is_del_pezzo(spec, sig):
                    outside_acm += 1
        ok = inside_ok == args.verify_samples and outside_acm == 0
        clean = clean and ok
        out_entries.append(
            {
                "scroll": entry.scroll,
                "a": list(entry.a),
                "h": entry.h,
                "case": entry.case,
                "locus_kind": entry.locus_kind,
                "locus": entry.locus,
                "verify": {
                    "inside_acm": inside_ok,
                    "inside_total": args.verify_samples,
                    "outside_acm": outside_acm,
                    "outside_total": outside_total,
                },
            }
        )
    _emit(
        {
            "schema": 1,
            "command": "atlas",
            "config": {
                "max_deg": args.max_deg,
                "max_n": args.max_n,
                "max_h": args.max_h,
                "q": ctx.q,
                "seed": args.seed,
                "verify_samples": args.verify_samples,
            },
            "result": {"entries": out_entries, "verified": clean},
        },
        args.out,
    )
    return EXIT_OK if clean else EXIT_DISAGREEMENT


def run_oracle_check(args) -> int:
    spec = parse_scroll(args.scroll)
    if args.q > ORACLE_Q_MAX:
        raise ScrollParseError(f"oracle commands need q <= {ORACLE_Q_MAX}")
    base_ctx = field_make(args.q, 1)
    rng = random.Random(args.seed)
    diffs = []
    checked = 0
    for _ in range(args.n):
        p = _random_external_point(spec, base_ctx, rng)
        for d in range(1, args.d + 1):
            ctx_d = field_make(args.q, d)
            brute = brute_secant_locus(spec, ctx_d, p, args.budget)
            fast = secant_locus_points(spec, ctx_d, p, args.budget)
            if brute != fast:
                diffs.append(
                    {
                        "point": _coords_str(p),
                        "d": d,
                        "kind": "secant-locus-set",
                        "brute_size": len(brute),
                        "fast_size": len(fast),
                    }
                )
            if d == 2:
                brep = brute_membership(spec, ctx_d, p, args.budget, args.dmax)
                frep = stratum_geometric(spec, base_ctx, p, args.dmax)
                if brep != frep:
                    diffs.append(
                        {
                            "point": _coords_str(p),
                            "d": d,
                            "kind": "membership-report",
                            "brute": brep.label_geom,
                            "fast": frep.label_geom,
                        }
                    )
                for problem in check_lift_equalities(spec, ctx_d, p, args.budget):
                    diffs.append(
                        {"point": _coords_str(p), "d": d, "kind": problem}
                    )
            checked += 1
    _emit(
        {
            "schema": 1,
            "command": "oracle-check",
            "config": {
                "scroll": scroll_literal(spec),
                "q": args.q,
                "d": args.d,
                "n": args.n,
                "seed": args.seed,
            },
            "result": {"checked": checked, "diffs": diffs},
        },
        args.out,
    )
    return EXIT_OK if not diffs else EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrollsec",
        description="Secant-locus classification of rational normal scrolls over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, q_default):
        sp.add_argument("--q", type=int, default=q_default)
        sp.add_argument("--dmax", type=int, default=2, choices=(1, 2))
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", type=str, default=None)

    sp = sub.add_parser("classify", help="classify one external point")
    sp.add_argument("--scroll", required=True)
    sp.add_argument("--point", required=True)
    common(sp, DEFAULT_Q)
    sp.set_defaults(func=run_classify)

    sp = sub.add_parser("sample", help="stratum census of random external points")
    sp.add_argument("--scroll", required=True)
    sp.add_argument("--n", type=int, default=200)
    common(sp, DEFAULT_Q)
    sp.set_defaults(func=run_sample)

    sp = sub.add_parser("atlas", help="emit the Del Pezzo atlas with verification")
    sp.add_argument("--max-deg", type=int, default=6)
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--max-h", type=int, default=1)
    sp.add_argument("--verify-samples", type=int, default=50)
    common(sp, DEFAULT_Q)
    sp.set_defaults(func=run_atlas)

    sp = sub.add_parser("oracle-check", help="cross-validate against brute force")
    sp.add_argument("--scroll", required=True)
    sp.add_argument("--n", type=int, default=25)
    sp.add_argument("--d", type=int, default=2, choices=(1, 2))
    sp.add_argument("--budget", type=int, default=10**7)
    common(sp, 7)
    sp.set_defaults(func=run_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScrollParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except PointOnVarietyError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ON_VARIETY
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except UnclassifiableSignatureError as exc:
        sys.stderr.write(f"error: unclassifiable signature: {exc}\n")
        return EXIT_UNCLASSIFIABLE
    except ScrollsecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
