"""Command-line entry point ``extremal-betti``.

Every command builds a JSON-ready payload plus a flat table; ``--format``
picks how it is printed.  Diagnostics go to stderr, results to stdout.

Exit codes: 0 success, 1 verification failed, 2 usage or input error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional, Sequence

from . import complex as cx
from .classifier import classify
from .errors import CapacityError, DomainError, FormatError, RangeError
from .extremal import (
    d_max,
    d_skeleton_value,
    g,
    g_maximizers,
    sigma_tb_complexes,
    sigma_tb_global,
    sigma_tb_witnesses,
    tb_upper_bound,
    tight_bound,
)
from .families import GENERATORS, generate
from .hochster import bigraded, tau
from .homology import reduced_betti
from .linalg import FieldSpec
from .search import OBJECTIVES, scan
from .verify import VERIFIERS, verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


class Result:
    """A payload for JSON output and a header/rows view for csv and table."""

    def __init__(self, payload, header: Sequence[str], rows: List[list], code: int = EXIT_OK):
        self.payload = payload
        self.header = list(header)
        self.rows = rows
        self.code = code


def _facets_text(facets) -> str:
    return " ".join("{" + ",".join(map(str, f)) + "}" for f in facets) or "{}"


def render(res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(res.payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(res.header)
        w.writerows(res.rows)
        return buf.getvalue()
    if len(res.rows) == 1 and len(res.header) == 1:
        return f"{res.rows[0][0]}\n"
    cells = [res.header] + [[str(c) for c in r] for r in res.rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(res.header))]
    # numbers right-aligned, everything else left-aligned
    numeric = [all(isinstance(r[k], int) and not isinstance(r[k], bool) for r in res.rows) for k in range(len(widths))]
    lines = [
        "  ".join(c.rjust(w) if num else c.ljust(w) for c, w, num in zip(r, widths, numeric)).rstrip()
        for r in cells
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# -- input -------------------------------------------------------------------


def _parse_gen(spec: str) -> cx.Complex:
    parts = spec.replace(":", " ").replace(",", " ").split()
    if not parts:
        raise RangeError("empty generator spec")
    try:
        params = [int(p) for p in parts[1:]]
    except ValueError:
        raise RangeError(f"generator parameters must be integers: {spec!r}") from None
    return generate(parts[0], *params)


def _input(args) -> cx.Complex:
    if args.gen is not None:
        return _parse_gen(args.gen)
    if args.file == "-":
        text = sys.stdin.read()
        where = "<stdin>"
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise FormatError(f"cannot read {args.file}: {exc.strerror}") from None
        where = args.file
    try:
        return cx.loads(text)
    except FormatError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _threads(n: int) -> int:
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


# -- commands ----------------------------------------------------------------


def cmd_betti(args) -> Result:
    K = _input(args)
    t = reduced_betti(K, args.field)
    payload = t.to_dict()
    payload["total"] = t.total
    rows = [[i, b] for i, b in sorted(t.by_degree.items())]
    return Result(payload, ["degree", "betti"], rows)


def cmd_bigraded(args) -> Result:
    K = _input(args)
    t = bigraded(K, args.field, _threads(args.threads))
    return Result(t.to_dict(), ["i", "j", "beta"], [[i, j, b] for (i, j), b in sorted(t.entries.items())])


def cmd_dtotal(args) -> Result:
    K = _input(args)
    d = bigraded(K, args.field, _threads(args.threads)).total
    return Result({"d_total": d, "field": args.field.tag}, ["d_total"], [[d]])


def cmd_tau(args) -> Result:
    K = _input(args)
    v = tau(K, args.field, args.i)
    text = str(v)
    return Result({"field": args.field.tag, "i": args.i, "tau": text}, ["tau"], [[text]])


def cmd_classify(args) -> Result:
    K = _input(args)
    doc = classify(K, args.field)
    dec = doc["decomposition"]
    rows = [[k, doc[k]] for k in ("m", "dim", "d_total", "tight_bound", "tight_numeric", "tight_structural")]
    rows.append(["cone_vertices", " ".join(map(str, dec["cone_vertices"])) or "-"])
    rows.append(["minimal_non_faces", _facets_text(dec["sphere_factors"])])
    rows.append(["residual", dec["residual"]])
    return Result(doc, ["key", "value"], rows)


def cmd_gen(args) -> Result:
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise RangeError("generator parameters must be integers") from None
    K = generate(args.kind, *params)
    if args.output:
        cx.dump(K, args.output)
    return Result(K.to_dict(), ["m", "facets"], [[K.m, _facets_text(K.facet_lists())]])


def cmd_scan(args) -> Result:
    rep = scan(
        args.m,
        args.d,
        args.objective,
        args.field,
        threads=_threads(args.threads),
        allow_long=args.long,
        progress=args.progress,
    )
    doc = rep.to_dict()
    rows = [[k, w["m"], _facets_text(w["facets"])] for k, w in enumerate(doc["witnesses"])]
    print(
        f"# m={rep.m} d={rep.d} objective={rep.objective} value={rep.extremal_value} "
        f"classes={rep.enumerated} elapsed={rep.elapsed:.2f}s",
        file=sys.stderr,
    )
    return Result(doc, ["witness", "m", "facets"], rows)


def cmd_verify(args) -> Result:
    params = {"field": args.field, "seed": args.seed}
    for name in ("m_max", "m", "samples", "n_max", "recurrence_max"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    if args.long:
        params["allow_long"] = True
    rep = verify(args.theorem, **params)
    doc = rep.to_dict()
    doc["params"] = {k: (v.tag if isinstance(v, FieldSpec) else v) for k, v in doc["params"].items()}
    rows = [["theorem", rep.theorem], ["passed", rep.passed], ["checked", rep.checked]]
    if rep.counterexample is not None:
        rows.append(["counterexample", json.dumps(rep.counterexample, sort_keys=True)])
    return Result(doc, ["key", "value"], rows, EXIT_OK if rep.passed else EXIT_FAIL)


def cmd_gtable(args) -> Result:
    if args.m_max < 1:
        raise RangeError("--m-max must be positive")
    out = []
    rows = []
    for m in range(1, args.m_max + 1):
        vals = [g(m, d) for d in range(m)]
        best = g_maximizers(m)
        out.append({"m": m, "g": vals, "argmax": best})
        rows.append([m, ",".join(map(str, best)), " ".join(map(str, vals))])
    return Result({"rows": out}, ["m", "argmax", "g(m,0..m-1)"], rows)


def cmd_bounds(args) -> Result:
    m, d = args.m, args.d
    doc = {
        "m": m,
        "d": d,
        "g": g(m, d),
        "tb_upper_bound": tb_upper_bound(m, d),
        "tight_bound": tight_bound(m, d),
        "d_skeleton_value": d_skeleton_value(m, d),
        "tb_witnesses": [K.to_dict() for K in sigma_tb_complexes(m, d)],
    }
    rows = [[k, doc[k]] for k in ("m", "d", "g", "tb_upper_bound", "tight_bound", "d_skeleton_value")]
    for K in sigma_tb_complexes(m, d):
        rows.append(["tb_witness", _facets_text(K.facet_lists())])
    return Result(doc, ["key", "value"], rows)


def cmd_witnesses(args) -> Result:
    """Closed-form answer sets: t̃b maximisers (global or at dimension d), or the D̃ maximiser."""
    if args.objective == "D_MAX":
        ans = d_max(args.m, args.field)
    elif args.d is None:
        ans = sigma_tb_global(args.m, args.field)
    else:
        ans = sigma_tb_witnesses(args.m, args.d, args.field)
    doc = ans.to_dict()
    doc["m"] = args.m
    rows = [[k, ans.value, _facets_text(K.facet_lists())] for k, K in enumerate(ans.witnesses)]
    return Result(doc, ["witness", "value", "facets"], rows)


# -- parser ------------------------------------------------------------------


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except (ValueError, RangeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--field", type=_field, default=dflt(FieldSpec(2)), help="f2 (default), f<p> for prime p, or q")
    p.add_argument("--format", choices=("json", "csv", "table"), default=dflt("table"))
    p.add_argument("--threads", type=int, default=dflt(1), help="worker processes; 0 picks the CPU count")
    p.add_argument("--seed", type=int, default=dflt(0), help="seed for sampled verifiers")


def _complex_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="complex JSON file, or - for stdin")
    src.add_argument("--gen", help="inline generator, e.g. 'cycle 5' or 'skeleton:5,1'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extremal-betti", description="Betti numbers of simplicial complexes")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    _complex_input(add("betti", cmd_betti, "reduced Betti numbers"))
    _complex_input(add("bigraded", cmd_bigraded, "bigraded Betti numbers via Hochster's formula"))
    _complex_input(add("dtotal", cmd_dtotal, "total bigraded Betti number"))
    p = add("tau", cmd_tau, "normalised Betti average tau_i")
    _complex_input(p)
    p.add_argument("--i", type=int, required=True)
    _complex_input(add("classify", cmd_classify, "tightness and join decomposition"))

    p = add("gen", cmd_gen, "generate a named complex; kinds: " + ", ".join(sorted(GENERATORS)))
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", help="write the complex file here as well as to stdout")

    p = add("scan", cmd_scan, "exhaustive extremal scan over isomorphism classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, default=None, help="dimension; omit to scan every dimension")
    p.add_argument("--objective", type=str.upper, choices=OBJECTIVES, required=True)
    p.add_argument("--long", action="store_true", help="allow long-running enumerations (m = 6)")
    p.add_argument("--progress", action="store_true", help="report progress on stderr")

    p = add("verify", cmd_verify, "run a theorem verifier: " + ", ".join(VERIFIERS))
    p.add_argument("--theorem", required=True)
    p.add_argument("--m-max", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--recurrence-max", type=int)
    p.add_argument("--long", action="store_true")

    p = add("gtable", cmd_gtable, "table of g(m, d) with its maximiser")
    p.add_argument("--m-max", type=int, required=True)

    p = add("bounds", cmd_bounds, "closed-form bounds at (m, d)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("witnesses", cmd_witnesses, "closed-form extremal complexes, re-measured before printing")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, default=None, help="dimension; omit for the global answer")
    p.add_argument("--objective", type=str.upper, choices=("TB_MAX", "D_MAX"), default="TB_MAX")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        res = args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (FormatError, RangeError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(res, args.format))
    return res.code


if __name__ == "__main__":
    sys.exit(main())
