"""Command-line front end.

Verbs: catalog, ybe-check, eyb-verify, invariant, alexander, skein-check,
dress, table, classify.  Exit codes: 0 success, 1 mismatch or verification
failure, 2 usage error, 3 parse error.  Output is deterministic; identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import __version__
from .braid import NAMED_LINKS, get_named_braid, parse_braid
from .catalog import (
    CATALOG_NAMES,
    check_ybe,
    get_rmatrix,
    load_rmatrix_json,
)
from .dressing import (
    diagonal_spec_from_json,
    diagonal_spec_to_json,
    dress_diagonal,
    dressed_eyb,
    preset_dressings,
    preset_names,
)
from .errors import ParseError, UnknownName, UnknownRow, YbtraceError
from .eyb import (
    eyb_from_json,
    eyb_to_json,
    get_table1_entry,
    get_table1_eyb,
    table1_entries,
    verify_eyb,
)
from .invariant import (
    ANNIHILATING_RELATIONS,
    SkeinFamily,
    alexander_nabla,
    check_skein_family,
    classification_report,
    compute_ts,
    get_relation,
    verify_annihilating,
)
from .ring import context_from_json, format_scalar, scalar_to_json
from .tables import run_table
from .tensor import matrix_substitute, matrix_to_json


def emit(result, fmt="text"):
    """Render a result object in the requested format, deterministically."""
    if fmt == "json":
        return json.dumps(_to_jsonable(result), sort_keys=True, indent=2)
    if fmt == "csv":
        rows = _to_rows(result)
        out = io.StringIO()
        header = list(rows[0]) if rows else []
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_csv_field(str(row[k])) for k in header) + "\n")
        return out.getvalue().rstrip("\n")
    return _to_text(result)


def _csv_field(text):
    if any(ch in text for ch in ",\"\n"):
        return '"' + text.replace('"', '""') + '"'
    return text


def _to_jsonable(result):
    from .invariant import InvariantResult
    from .ring import Scalar
    from .tables import TableReport
    from .tensor import SquareMatrix

    if isinstance(result, Scalar):
        return scalar_to_json(result)
    if isinstance(result, SquareMatrix):
        return matrix_to_json(result)
    if isinstance(result, InvariantResult):
        return {
            "value": scalar_to_json(result.value),
            "normalized": result.normalized,
            "unknot_value": scalar_to_json(result.unknot_value),
        }
    if isinstance(result, TableReport):
        return {
            "table": result.table,
            "ok": result.ok,
            "cells": [
                {
                    "link": c.link,
                    "column": c.column,
                    "computed": c.computed,
                    "expected": c.expected,
                    "match": c.match,
                }
                for c in result.cells
            ],
        }
    if isinstance(result, list):
        return result
    return result


def _to_rows(result):
    from .tables import TableReport

    if isinstance(result, TableReport):
        return [
            {
                "table": result.table,
                "link": c.link,
                "column": c.column,
                "computed": c.computed,
                "expected": c.expected,
                "match": "yes" if c.match else "no",
            }
            for c in result.cells
        ]
    if isinstance(result, list) and result and isinstance(result[0], dict):
        return result
    raise ValueError("csv output is only defined for tabular results")


def _to_text(result):
    from .invariant import InvariantResult
    from .ring import Scalar
    from .tables import TableReport
    from .tensor import SquareMatrix

    if isinstance(result, Scalar):
        return format_scalar(result)
    if isinstance(result, InvariantResult):
        return format_scalar(result.value)
    if isinstance(result, SquareMatrix):
        lines = [f"side {result.side}"]
        for (r, c) in sorted(result.entries):
            lines.append(f"  [{r},{c}] = {format_scalar(result.entries[(r, c)])}")
        return "\n".join(lines)
    if isinstance(result, TableReport):
        lines = []
        for cell in result.cells:
            status = "PASS" if cell.match else "FAIL"
            line = f"table {result.table} | {cell.link} | {cell.column} | {status}"
            if not cell.match:
                line += f" | computed {cell.computed} | expected {cell.expected}"
            lines.append(line)
        lines.append(f"table {result.table}: {'all cells match' if result.ok else 'MISMATCH'}")
        return "\n".join(lines)
    if isinstance(result, list) and result and isinstance(result[0], dict):
        header = list(result[0])
        lines = ["  ".join(header)]
        for row in result:
            lines.append("  ".join(str(row[k]) for k in header))
        return "\n".join(lines)
    return str(result)


def _load_json(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _operator_from_args(args):
    if getattr(args, "preset", None):
        return preset_dressings(args.preset).eyb
    if args.rmatrix is None:
        raise UnknownName("an operator is required: --rmatrix/--row or --preset")
    return get_table1_eyb(args.rmatrix, args.row, args.sign)


def _braid_from_args(args):
    return parse_braid(args.braid, args.strands)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ybtrace",
        description="Exact link invariants from two-dimensional Yang-Baxter solutions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("catalog", help="list catalog matrices, operator rows, links")
    p.add_argument(
        "what",
        nargs="?",
        default="all",
        choices=["rmatrices", "eybs", "links", "presets", "relations", "all"],
    )

    p = sub.add_parser("ybe-check", help="check the braid-form Yang-Baxter equation")
    p.add_argument("--rmatrix", choices=CATALOG_NAMES)
    p.add_argument("--file", help="matrix JSON file")
    p.add_argument("--context", help="context JSON file (with --file)")
    p.add_argument("--unchecked", action="store_true",
                   help="load a custom matrix without rejecting non-solutions")

    p = sub.add_parser("eyb-verify", help="verify the enhancement conditions")
    p.add_argument("--rmatrix", choices=CATALOG_NAMES)
    p.add_argument("--row", type=int, default=1)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--file", help="operator JSON file")
    p.add_argument("--context", help="context JSON file (with --file)")

    p = sub.add_parser("invariant", help="trace invariant of a braid closure")
    p.add_argument("--rmatrix", choices=CATALOG_NAMES)
    p.add_argument("--row", type=int, default=1)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--preset", choices=("d3_R21", "d3_R22", "d4_R22"))
    p.add_argument("--braid", help="whitespace-separated letters, e.g. '1 1 1'")
    p.add_argument("--link", help="a named link instead of --braid")
    p.add_argument("--strands", type=int)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("alexander", help="the regularized one-variable invariant")
    p.add_argument("--braid")
    p.add_argument("--link")
    p.add_argument("--strands", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("skein-check", help="verify an annihilating relation and its skein sum")
    p.add_argument("--relation", required=True, choices=sorted(ANNIHILATING_RELATIONS))
    p.add_argument("--rmatrix", choices=CATALOG_NAMES)
    p.add_argument("--row", type=int, default=1)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--base", default="", help="base braid word")
    p.add_argument("--strands", type=int)
    p.add_argument("--position", type=int, default=1,
                   help="generator index receiving the crossing powers")

    p = sub.add_parser("dress", help="assemble and verify a dressed solution")
    p.add_argument("--preset", choices=("d3_R21", "d3_R22", "d4_R22"))
    p.add_argument("--file", help="diagonal dressing spec JSON")
    p.add_argument("--context", help="context JSON file (with --file)")
    p.add_argument("--base", choices=CATALOG_NAMES, help="base matrix (with --file)")
    p.add_argument("--base-row", type=int, default=1)
    p.add_argument("--mode", choices=["trivial", "nontrivial"], default="nontrivial")
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--no-check", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("table", help="recompute a reference table and diff it")
    p.add_argument("which", type=int, choices=[1, 2, 3, 4])
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("classify", help="invariant classification over the named links")
    p.add_argument("--format", choices=["text", "json", "csv"], default="csv")
    p.add_argument("--sign", choices=["+", "-"], default="+")

    return parser


def _cmd_catalog(args, out):
    what = args.what
    if what in ("rmatrices", "all"):
        for name in CATALOG_NAMES:
            spec = get_rmatrix(name)
            gens = ", ".join(spec.ctx.generators)
            limits = " ".join(f"{g}!=0" for g, _ in spec.constraints)
            out(f"rmatrix {name}  generators: {gens}  nonsingular when: {limits or 'always'}")
    if what in ("eybs", "all"):
        for entry in table1_entries():
            restr = " ".join(f"{g}={v}" for g, v in entry.restrictions) or "-"
            out(
                f"eyb {entry.rmatrix} row {entry.row}  tag: {entry.tag}  "
                f"restriction: {restr}"
            )
    if what in ("links", "all"):
        for name in NAMED_LINKS:
            link = get_named_braid(name)
            word = str(link.braid) or "(empty)"
            out(
                f"link {name}  braid: {word}  strands: {link.braid.strands}  "
                f"components: {link.components}"
            )
    if what in ("presets", "all"):
        for name in preset_names():
            out(f"preset {name}")
    if what in ("relations", "all"):
        for name in sorted(ANNIHILATING_RELATIONS):
            spec = ANNIHILATING_RELATIONS[name]
            terms = " + ".join(f"({c})*R^{p}" for p, c in spec.coefficients)
            out(f"relation {name}: {terms} = 0")
    return 0


def _cmd_ybe_check(args, out):
    if args.rmatrix:
        matrix = get_rmatrix(args.rmatrix).matrix
    elif args.file:
        if not args.context:
            raise UnknownName("--file needs --context")
        ctx = context_from_json(_load_json(args.context))
        try:
            matrix = load_rmatrix_json(ctx, _load_json(args.file), checked=not args.unchecked)
        except ValueError as exc:
            out(str(exc))
            return 1
    else:
        raise UnknownName("give --rmatrix or --file")
    verdict = check_ybe(matrix)
    if verdict:
        out("YBE: ok")
        return 0
    out(f"YBE: FAIL at {verdict.index}, residual {format_scalar(verdict.residual)}")
    return 1


def _cmd_eyb_verify(args, out):
    if args.file:
        if not args.context:
            raise UnknownName("--file needs --context")
        ctx = context_from_json(_load_json(args.context))
        op = eyb_from_json(ctx, _load_json(args.file))
    else:
        if not args.rmatrix:
            raise UnknownName("give --rmatrix or --file")
        op = get_table1_eyb(args.rmatrix, args.row, args.sign)
    verdict = verify_eyb(op)
    if verdict:
        out("EYB: ok")
        return 0
    out(f"EYB: FAIL condition {verdict.condition}")
    return 1


def _cmd_invariant(args, out):
    op = _operator_from_args(args)
    if args.link:
        b = get_named_braid(args.link).braid
    elif args.braid is not None:
        b = _braid_from_args(args)
    else:
        raise UnknownName("give --braid or --link")
    result = compute_ts(op, b, normalized=args.normalized)
    out(emit(result, args.format))
    return 0


def _cmd_alexander(args, out):
    if args.link:
        b = get_named_braid(args.link).braid
    elif args.braid is not None:
        b = _braid_from_args(args)
    else:
        raise UnknownName("give --braid or --link")
    value = alexander_nabla(b)
    out(emit(value, args.format))
    return 0


def _cmd_skein_check(args, out):
    relation = get_relation(args.relation)
    ctx_rel = relation.context()
    matrix = relation.matrix(ctx_rel)
    verdict = verify_annihilating(matrix, relation.coeffs(ctx_rel))
    if not verdict:
        out(f"annihilating relation {args.relation}: FAIL")
        return 1
    out(f"annihilating relation {args.relation}: ok")
    rmatrix = args.rmatrix or relation.rmatrix
    op = get_table1_eyb(rmatrix, args.row, args.sign)
    base = parse_braid(args.base, args.strands) if args.base or args.strands else parse_braid("", max(2, args.position + 1))
    if base.strands < args.position + 1:
        base = parse_braid(str(base), args.position + 1)
    family = SkeinFamily(base, args.position,
                         tuple((p, op.ctx.parse(c)) for p, c in relation.coefficients))
    check = check_skein_family(op, family)
    if check:
        out("skein family sum: 0")
        return 0
    out(f"skein family sum: nonzero residual {format_scalar(check.residual)}")
    return 1


def _cmd_dress(args, out):
    if args.preset:
        preset = preset_dressings(args.preset)
        dressed, op, spec = preset.matrix, preset.eyb, preset.spec
    elif args.file:
        if not args.context or not args.base:
            raise UnknownName("--file needs --context and --base")
        ctx = context_from_json(_load_json(args.context))
        spec = diagonal_spec_from_json(ctx, _load_json(args.file))
        base = get_rmatrix(args.base)
        base_matrix = matrix_substitute(base.matrix, {}, ctx)
        dressed = dress_diagonal(base_matrix, spec, check=not args.no_check)
        base_op = _entry_over(args.base, args.base_row, ctx)
        op = dressed_eyb(base_op, dressed, spec, mode=args.mode,
                         sign=args.sign, check=not args.no_check)
    else:
        raise UnknownName("give --preset or --file")
    if args.format == "json":
        payload = {
            "spec": diagonal_spec_to_json(spec),
            "matrix": matrix_to_json(dressed),
            "eyb": eyb_to_json(op),
        }
        out(json.dumps(payload, sort_keys=True, indent=2))
    else:
        out(f"dressed matrix side {dressed.side} with {len(dressed.entries)} entries; checks passed"
            if not args.no_check else
            f"dressed matrix side {dressed.side} with {len(dressed.entries)} entries; checks skipped")
    return 0


def _entry_over(rmatrix, row, ctx):
    return get_table1_entry(rmatrix, row).build(ctx=ctx)


def _cmd_table(args, out):
    report = run_table(args.which)
    out(emit(report, args.format))
    return 0 if report.ok else 1


def _cmd_classify(args, out):
    rows = classification_report(sign=args.sign)
    out(emit(rows, args.format))
    return 0 if all(r["match"] != "no" for r in rows) else 1


_COMMANDS = {
    "catalog": _cmd_catalog,
    "ybe-check": _cmd_ybe_check,
    "eyb-verify": _cmd_eyb_verify,
    "invariant": _cmd_invariant,
    "alexander": _cmd_alexander,
    "skein-check": _cmd_skein_check,
    "dress": _cmd_dress,
    "table": _cmd_table,
    "classify": _cmd_classify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    stdout = sys.stdout

    def out(text):
        print(text, file=stdout)

    try:
        return _COMMANDS[args.verb](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except (UnknownName, UnknownRow) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except YbtraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
