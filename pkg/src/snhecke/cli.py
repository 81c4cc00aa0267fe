"""
Command-line surface.

Subcommands: hecke, rs, cells, patterns, classify, tables, indec, sweep,
prebuild, bench.  Global options pick the degree, cache directory, output
format, and an optional TOML config file; exit codes are 0 on success, 2 on
a certificate/verification failure, 3 when pending work remains
(interrupted sweep), 4 on I/O problems.

The ``hecke`` subcommand evaluates a tiny expression grammar over the three
bases, e.g.::

    snhecke hecke "C: C(6,5)*C(1,2,4,3,2,5,6)"
    snhecke hecke "coeff(C(1,3,4,3,6)*C(1,2,3,4,5,6,5,4,3,2,1), 1,3,4,3,6)"

printing GAP3-comparable text.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .backend import BACKEND
from .hecke import HeckeAlgebra, KLCache, default_cache_dir
from .laurent import LaurentPoly
from .perm import Permutation, compressed_str, from_word, parse_perm
from .tableaux import rs, shape_of, cell_members, a_value

EXIT_OK = 0
EXIT_CERT = 2
EXIT_PENDING = 3
EXIT_IO = 4


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        import tomllib  # Python 3.11+
    except ImportError:
        import tomli as tomllib
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _algebra(args) -> HeckeAlgebra:
    A = HeckeAlgebra(args.degree)
    cache = KLCache(A, args.cache) if args.cache else KLCache(A)
    cache.ensure(save_if_built=not args.no_cache_write)
    return A


# ---------------------------------------------------------------------------
# the expression grammar
# ---------------------------------------------------------------------------


class _ExprParser:
    """expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := INT | v-power | basis atom | coeff(expr, word) | '(' expr ')'."""

    def __init__(self, text: str, algebra: HeckeAlgebra):
        self.text = text
        self.pos = 0
        self.A = algebra

    def _ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str):
        if self._peek() != ch:
            raise ValueError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def parse(self):
        out = self.expr()
        self._ws()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at position {self.pos}")
        return out

    def expr(self):
        val = self.term()
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            val = self._combine(val, rhs, -1 if op == "-" else 1)
        return val

    def _combine(self, a, b, sign):
        if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
            return a + b * sign
        if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
            raise ValueError("cannot add a scalar to an algebra element")
        return a + b.scale(sign) if sign < 0 else a + b

    def term(self):
        val = self.factor()
        while self._peek() == "*":
            self.pos += 1
            rhs = self.factor()
            if isinstance(val, LaurentPoly) and isinstance(rhs, LaurentPoly):
                val = val * rhs
            elif isinstance(val, LaurentPoly):
                val = rhs.scale(val)
            elif isinstance(rhs, LaurentPoly):
                val = val.scale(rhs)
            else:
                val = val * rhs
        return val

    def factor(self):
        ch = self._peek()
        if ch == "(":
            self._expect("(")
            val = self.expr()
            self._expect(")")
            return val
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return LaurentPoly({0: int(self.text[start : self.pos])})
        if ch == "v":
            self.pos += 1
            e = 1
            if self._peek() == "^":
                self.pos += 1
                neg = False
                if self._peek() == "(":
                    self._expect("(")
                    if self._peek() == "-":
                        neg = True
                        self.pos += 1
                    e = self._int()
                    self._expect(")")
                else:
                    if self._peek() == "-":
                        neg = True
                        self.pos += 1
                    e = self._int()
                if neg:
                    e = -e
            return LaurentPoly({e: 1})
        word = self._ident()
        if word in ("C", "D", "H"):
            self._expect("(")
            letters = self._word_list()
            self._expect(")")
            w = from_word(letters, self.A.n)
            if word == "C":
                return self.A.kl(w)
            if word == "D":
                return self.A.dual_kl(w)
            return self.A.standard(w)
        if word == "coeff":
            self._expect("(")
            val = self.expr()
            self._ws()
            self._expect(",")
            letters = self._word_list()
            self._expect(")")
            if isinstance(val, LaurentPoly):
                raise ValueError("coeff expects an algebra element")
            w = from_word(letters, self.A.n)
            basis = "C" if val.basis == "H" else val.basis
            return val.to_basis(basis).coefficient(w)
        raise ValueError(f"unknown token {word!r} in expression")

    def _int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected integer at {start}")
        return int(self.text[start : self.pos])

    def _ident(self) -> str:
        self._ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start : self.pos]

    def _word_list(self) -> list[int]:
        letters = []
        while True:
            self._ws()
            if self._peek() == ")":
                return letters
            letters.append(self._int())
            self._ws()
            if self._peek() == ",":
                self.pos += 1
            else:
                return letters


def cmd_hecke(args) -> int:
    A = _algebra(args)
    text = args.expression.strip()
    basis = None
    for tag in ("C", "D", "H"):
        if text.startswith(tag + ":"):
            basis = tag
            text = text[2:].strip()
            break
    val = _ExprParser(text, A).parse()
    if isinstance(val, LaurentPoly):
        print(val.gap_str())
    else:
        if basis:
            val = val.to_basis(basis)
        print(val)
    return EXIT_OK


# ---------------------------------------------------------------------------
# small combinatorics commands
# ---------------------------------------------------------------------------


def cmd_rs(args) -> int:
    w = parse_perm(args.perm, args.degree)
    P, Q = rs(w)
    payload = {
        "one_line": str(w),
        "word": compressed_str(w),
        "shape": list(shape_of(w)),
        "P": [list(r) for r in P],
        "Q": [list(r) for r in Q],
        "length": w.length(),
        "right_descents": sorted(w.right_descents()),
        "left_descents": sorted(w.left_descents()),
        "a_value": a_value(w),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key in ("one_line", "word", "shape", "length", "right_descents", "a_value"):
            print(f"{key}: {payload[key]}")
        for tab in ("P", "Q"):
            print(f"{tab}:")
            for row in payload[tab]:
                print("  " + " ".join(map(str, row)))
    return EXIT_OK


def cmd_cells(args) -> int:
    w = parse_perm(args.perm, args.degree)
    members = cell_members(w, args.side)
    rows = [{"one_line": str(m), "word": compressed_str(m), "length": m.length()} for m in members]
    _emit_rows(rows, ["one_line", "word", "length"], args.format)
    return EXIT_OK


def cmd_patterns(args) -> int:
    from .patterns import negative_pattern_witness, consecutive_occurrences, NEGATIVE_PATTERNS

    w = parse_perm(args.perm, args.degree)
    hits = []
    for p in NEGATIVE_PATTERNS:
        for m in consecutive_occurrences(w, p):
            hits.append({"pattern": "".join(map(str, p)), "position": m})
    wit = negative_pattern_witness(w)
    payload = {
        "one_line": str(w),
        "consecutive": hits,
        "witness": wit.as_json() if wit else None,
    }
    print(json.dumps(payload, indent=2, sort_keys=True) if args.format == "json" else payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# pipeline commands
# ---------------------------------------------------------------------------


def _emit_rows(rows: list[dict], columns: list[str], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _csv_cell(r.get(k)) for k in columns})
    else:
        widths = {c: max(len(c), *(len(_csv_cell(r.get(c))) for r in rows)) if rows else len(c) for c in columns}
        out.write("  ".join(c.ljust(widths[c]) for c in columns) + "\n")
        for r in rows:
            out.write("  ".join(_csv_cell(r.get(c)).ljust(widths[c]) for c in columns) + "\n")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return str(v)


def cmd_classify(args) -> int:
    from .pipeline import classify_all, counts_report, VerificationError

    try:
        records = classify_all(args.degree, verify=not args.no_verify)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    rows = [r.as_json() for _, r in sorted(records.items(), key=lambda t: t[0].one_line)]
    counts = counts_report(args.degree)
    if args.format == "json":
        print(json.dumps({"records": rows, "counts": counts}, indent=2, sort_keys=True))
    else:
        _emit_rows(rows, ["d", "one_line", "verdict", "provenance", "graded_sweep"], args.format)
        print(f"{counts['positive_involutions']} positive / "
              f"{counts['negative_involutions']} negative")
    return EXIT_OK


def cmd_tables(args) -> int:
    from .pipeline import (
        parabolic_lift_table, fc_table, pattern_table, classify_all, VerificationError,
    )

    try:
        if args.which == 1:
            rows = [r.as_json() for r in parabolic_lift_table(args.degree)]
            cols = ["d", "one_line", "I", "w", "verdict"]
        elif args.which == 2:
            rows = [
                {"d": compressed_str(d), "one_line": str(d),
                 "factorization": " ".join(f"({i},{j})" for i, j in fac), "verdict": K}
                for d, fac, K in fc_table(args.degree)
            ]
            cols = ["d", "one_line", "factorization", "verdict"]
        elif args.which == 3:
            rows = [r.as_json() for r in pattern_table(args.degree)]
            cols = ["d", "one_line", "pattern"]
        elif args.which == 4:
            records = classify_all(args.degree)
            rows = [r.as_json() for _, r in sorted(records.items(), key=lambda t: t[0].one_line)
                    if not r.verdict]
            cols = ["d", "one_line", "provenance"]
        elif args.which == 5:
            from .indec import support_filter_table
            rows = [
                {"x": compressed_str(x), "shape": "".join(map(str, sh)),
                 "descents": list(ds)}
                for x, sh, ds in support_filter_table(args.degree)
            ]
            cols = ["x", "shape", "descents"]
        else:
            print("table number must be 1..5", file=sys.stderr)
            return EXIT_IO
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    _emit_rows(rows, cols, args.format)
    return EXIT_OK


def cmd_indec(args) -> int:
    from .indec import run_indec_pipeline
    from .pipeline import VerificationError

    A = _algebra(args)
    try:
        report = run_indec_pipeline(A)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    if args.format == "json":
        payload = dict(report)
        payload["cases"] = [c.as_json() for c in report["cases"]]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for case in report["cases"]:
            cj = case.as_json()
            print(f"case {cj['case']}: d = {cj['d']}, {len(cj['candidates'])} candidates")
            for cand in cj["candidates"]:
                extra = " [extra]" if cand.get("extra") else ""
                tail = cand.get("polynomial", cand.get("target", ""))
                print(f"  {cand['x']}: {cand['outcome']}{extra} {tail}")
        cov = report["coverage"]
        print(f"coverage: {report['resolved_involutions']} involutions "
              f"(lift {cov['lift']}, fully-commutative {cov['fully_commutative']}, "
              f"positive {cov['positive']}, scripted {cov['case']}); "
              f"criterion failures: {report['criterion_failures']}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .pipeline import kh_ev_sweep, kh_pair_plan, SweepCheckpoint

    A = _algebra(args)
    d = parse_perm(args.d, args.degree)
    ckpt = SweepCheckpoint(args.resume) if args.resume else None
    try:
        outcome = kh_ev_sweep(A, d, mode=args.mode, checkpoint=ckpt,
                              stop_after=args.stop_after)
    except OSError as exc:
        print(f"checkpoint I/O failed: {exc}", file=sys.stderr)
        return EXIT_IO
    payload = outcome.as_json()
    print(json.dumps(payload, indent=2, sort_keys=True))
    if outcome.interrupted:
        return EXIT_PENDING
    return EXIT_OK if outcome.all_distinct else EXIT_CERT


def cmd_prebuild(args) -> int:
    A = HeckeAlgebra(args.degree)
    cache = KLCache(A, args.cache) if args.cache else KLCache(A)
    loaded = cache.load()
    if not loaded:
        A.prebuild()
        try:
            path = cache.save()
        except OSError as exc:
            print(f"cannot write cache: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"built and wrote {path}")
    else:
        print(f"cache already present at {cache.kl_path}")
    return EXIT_OK


def cmd_bench(args) -> int:
    from . import bench

    # a pure-Python degree-7 basis build is not a useful comparison point
    bench.run(6 if args.degree == 7 else args.degree)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="snhecke",
        description="Exact Hecke-algebra combinatorics and the degree-7 "
                    "classification pipeline",
    )
    ap.add_argument("--config", help="TOML file with defaults for the options below")
    ap.add_argument("--n", "--degree", dest="degree", type=int, default=7,
                    help="symmetric group degree (default 7)")
    ap.add_argument("--cache", help=f"basis cache directory (default {default_cache_dir()})")
    ap.add_argument("--no-cache-write", action="store_true",
                    help="never write cache files")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker count for stages that parallelize")
    ap.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hecke", help="evaluate a basis expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("rs", help="insertion/recording tableaux and shape data")
    p.add_argument("perm")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("cells", help="members of a left/right cell")
    p.add_argument("perm")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("patterns", help="consecutive pattern scan")
    p.add_argument("perm")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("classify", help="full verdict map with provenance")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", help="emit one of the five pipeline tables")
    p.add_argument("--which", type=int, required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("indec", help="run the indecomposability case analysis")
    p.set_defaults(func=cmd_indec)

    p = sub.add_parser("sweep", help="distinguishability pair sweep for one involution")
    p.add_argument("--d", required=True, help="the involution (any accepted text form)")
    p.add_argument("--mode", choices=("ev", "graded"), default="ev")
    p.add_argument("--resume", help="JSONL checkpoint path")
    p.add_argument("--stop-after", type=int, default=None,
                   help="simulate an interrupt after this many new pairs")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("prebuild", help="build and persist the basis cache")
    p.set_defaults(func=cmd_prebuild)

    p = sub.add_parser("bench", help="compare the compiled and pure backends")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = _load_config(args.config)
    for key, val in cfg.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and ap.get_default(attr) == getattr(args, attr):
            setattr(args, attr, val)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_IO
    except KeyboardInterrupt:
        print("interrupted; checkpointed work is preserved", file=sys.stderr)
        return EXIT_PENDING


if __name__ == "__main__":
    sys.exit(main())
