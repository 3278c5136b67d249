"""Command-line surface: describe, classify, verify, witness.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 precondition failure (e.g. requesting a witness for a simple root that
is neither special nor co-special). Simple-root indices on this surface
are 0-based; the 1-based Bourbaki label is shown alongside as "aN".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import report as report_mod
from .classify import (
    descent_blockers,
    height,
    highest_roots,
    levi_orbit_multiplicity_violations,
    verify_theorem,
)
from .core import CartanType, admissible_types, build_system
from .errors import (
    BadIndex,
    InadmissibleRank,
    NeitherSpecialNorCospecial,
    ParseError,
    RootSystemError,
)
from .weyl import apply_word, dominant_rep, full_base, reflect
from .witness import dominant_witness

ENV_MAX_RANK = "ROOTKIT_MAX_RANK"


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _vec_str(v) -> str:
    return "[" + ", ".join(report_mod.rational_str(x) for x in v) + "]"


def cmd_describe(args) -> int:
    s = build_system(CartanType.parse(args.ctype))
    top, top_short = highest_roots(s)
    if args.format == "json":
        payload = {
            "schema_version": report_mod.SCHEMA_VERSION,
            "ctype": str(s.ctype),
            "rank": s.rank,
            "dimension": s.dim,
            "simply_laced": s.is_simply_laced,
            "root_count": len(s.roots),
            "simples": [list(report_mod.vector_strs(a)) for a in s.simples],
            "roots": [list(report_mod.vector_strs(b)) for b in s.roots],
            "positives": [list(report_mod.vector_strs(b)) for b in s.positives],
            "heights": [height(s, b) for b in s.positives],
            "form": [list(report_mod.vector_strs(row)) for row in s.form],
            "highest_root": list(report_mod.vector_strs(top)),
            "highest_short": list(report_mod.vector_strs(top_short)),
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [
        f"type {s.ctype}: rank {s.rank}, ambient dimension {s.dim}, "
        f"{'simply-laced' if s.is_simply_laced else 'multi-laced'}",
        f"roots: {len(s.roots)} ({len(s.positives)} positive)",
        "simple roots:",
    ]
    for i, a in enumerate(s.simples):
        lines.append(f"  {i} (a{i + 1}): {_vec_str(a)}")
    lines.append(f"highest root: {_vec_str(top)} (height {height(s, top)})")
    lines.append(f"highest short root: {_vec_str(top_short)} "
                 f"(height {height(s, top_short)})")
    lines.append("positive roots by height:")
    for b in s.positives:
        lines.append(f"  {height(s, b):3d}  {_vec_str(b)}")
    lines.append("form (Gram matrix):")
    for row in s.form:
        lines.append(f"  {_vec_str(row)}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_classify(args) -> int:
    s = build_system(CartanType.parse(args.ctype))
    rep = verify_theorem(s)
    for row in rep.rows:
        if row.witness is not None:
            alpha = s.simples[row.simple_index]
            dom, _ = dominant_rep(s, alpha, full_base(s))
            assert apply_word(s, row.witness, alpha) == dom
    doc = report_mod.document_from_report(s, rep)
    if args.format == "json":
        _write(report_mod.to_json(doc), args.out)
    elif args.format == "csv":
        _write(report_mod.to_csv(doc), args.out)
    else:
        _write(report_mod.to_table(doc), args.out)
    return 0


def cmd_verify(args, parser) -> int:
    if args.types:
        try:
            types = [CartanType.parse(t.strip()) for t in args.types.split(",")]
        except (ParseError, InadmissibleRank) as exc:
            parser.error(str(exc))
    else:
        max_rank = args.max_rank
        if max_rank is None:
            raw = os.environ.get(ENV_MAX_RANK, "8")
            try:
                max_rank = int(raw)
            except ValueError:
                parser.error(f"{ENV_MAX_RANK}={raw!r} is not an integer")
        if max_rank < 1:
            parser.error("--max-rank must be >= 1")
        types = admissible_types(max_rank)

    lines = []
    failures = 0
    total_rows = 0
    t_start = time.perf_counter()
    for ctype in types:
        t0 = time.perf_counter()
        s = build_system(ctype)
        rep = verify_theorem(s)
        blockers = sum(len(descent_blockers(s, i)) for i in range(s.rank))
        violations = len(levi_orbit_multiplicity_violations(s))
        ok = rep.all_equivalent and blockers == 0 and violations == 0
        if not ok:
            failures += 1
        total_rows += len(rep.rows)
        dt = time.perf_counter() - t0
        lines.append(
            f"{ctype}: rows={len(rep.rows)} "
            f"equivalence={'ok' if rep.all_equivalent else 'FAIL'} "
            f"descent_blockers={blockers} levi_mult_violations={violations} "
            f"({dt:.3f}s)")
    dt_all = time.perf_counter() - t_start
    verdict = "all checks passed" if failures == 0 else f"{failures} type(s) FAILED"
    lines.append(f"checked {len(types)} systems, {total_rows} simple roots: "
                 f"{verdict} ({dt_all:.3f}s)")
    _write("\n".join(lines) + "\n", args.out)
    return 0 if failures == 0 else 1


def cmd_witness(args) -> int:
    s = build_system(CartanType.parse(args.ctype))
    i = args.index
    s.check_simple_index(i)
    res = dominant_witness(s, i)
    lines = [
        f"type {s.ctype}, simple root {i} (a{i + 1}) = {_vec_str(res.source)}",
        f"target dom = {_vec_str(res.target)}",
        f"word (0-based letters, applied last to first): "
        f"[{' '.join(str(x) for x in res.word)}]",
        "replay:",
        f"  start: {_vec_str(res.source)}",
    ]
    v = res.source
    for letter in reversed(res.word.letters):
        v = reflect(s, letter, v)
        lines.append(f"  s_{letter}: {_vec_str(v)}")
    assert v == res.target
    lines.append("verified: replay reaches the target")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootkit",
        description="Exact computations in irreducible root systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="dump roots, base, positives, form")
    p.add_argument("ctype", help="Cartan type, e.g. B3")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("classify", help="per-simple-root classification report")
    p.add_argument("ctype")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="exhaustively verify the equivalence "
                                      "and the orbit/multiplicity properties")
    p.add_argument("--max-rank", type=int, default=None,
                   help=f"check all admissible types up to this rank "
                        f"(default: ${ENV_MAX_RANK} or 8)")
    p.add_argument("--types", default=None,
                   help="comma-separated explicit type list, e.g. G2,B3")
    p.add_argument("--out", default=None)

    p = sub.add_parser("witness", help="explicit word conjugating a simple "
                                       "root to its dominant representative")
    p.add_argument("ctype")
    p.add_argument("index", type=int, help="0-based simple root index")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "describe":
            return cmd_describe(args)
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "witness":
            return cmd_witness(args)
    except (ParseError, InadmissibleRank, BadIndex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NeitherSpecialNorCospecial as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RootSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
