"""Command-line front end.

Exit codes: 0 ok, 1 syntax/usage error, 2 invalid map, 3 split map,
4 the two Nielsen routes disagree.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from itertools import product
from pathlib import Path

import numpy as np

from .braid import b_inv, b_mul
from .errors import ExponentOverflow, KleinBraidError, WordSyntaxError
from .lift import bu_fails, check_constraints, lift_factors
from .maps import FIXTURE_FAMILIES, MapClass, MapDescriptor, extract_params
from .nielsen import nielsen_numbers, nielsen_report, params_row
from .syntax import format_map_file, format_word, parse_braid, parse_map_file, print_braid

EXIT_OK, EXIT_SYNTAX, EXIT_INVALID, EXIT_SPLIT, EXIT_DISAGREE = range(5)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SYNTAX, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"-3:3"`` (inclusive) or ``"1,3,5"``."""
    try:
        if "," in text:
            return [int(t) for t in text.split(",")]
        if ":" in text:
            lo, hi = (int(t) for t in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


# ------------------------------------------------------------------ reports


def _klein(g) -> list[int]:
    return [int(g[0]), int(g[1])]


def _hom(h) -> dict:
    return {
        "domain": h.domain.value,
        "img_a": _klein(h.img_a),
        "img_b": _klein(h.img_b),
        "bu_fails": bu_fails(h),
    }


def build_report(d: MapDescriptor) -> tuple[dict, int]:
    """Full report document and the exit code it implies for ``nielsen``."""
    doc = {
        "valid": d.valid,
        "split": None,
        "type": None,
        "params": None,
        "constraints": None,
        "f1": None,
        "f2": None,
        "nielsen": None,
    }
    if not d.valid:
        return doc, EXIT_INVALID
    p = extract_params(d)
    cls = p.map_class
    doc["split"] = cls is MapClass.SPLIT
    doc["type"] = cls.value
    doc["params"] = {"w1": format_word(p.w1), "w2": format_word(p.w2), **p.as_dict()}
    if cls is MapClass.SPLIT:
        return doc, EXIT_SPLIT
    rep = check_constraints(p, cls)
    doc["constraints"] = {"satisfied": rep.satisfied, "violated": rep.violated}
    f1, f2 = lift_factors(d)
    doc["f1"], doc["f2"] = _hom(f1), _hom(f2)
    nr = nielsen_report(d)
    doc["nielsen"] = {
        "formula": nr.n_formula,
        "coincidence": nr.n_coincidence,
        "agree": nr.agree,
        "branch": nr.branch,
        "zero": nr.zero,
    }
    return doc, EXIT_OK if nr.agree else EXIT_DISAGREE


def dump_document(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_document(text: str):
    return json.loads(text)


def _render_table(rows: list[tuple[str, str]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _flatten(doc: dict, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    for key, value in doc.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten(value, name + "."))
        elif isinstance(value, list) and value and isinstance(value[0], str):
            rows.append((name, "; ".join(value)))
        elif value is None:
            rows.append((name, "-"))
        elif isinstance(value, bool):
            rows.append((name, str(value).lower()))
        elif isinstance(value, list):
            rows.append((name, "(" + ", ".join(map(str, value)) + ")" if value else "none"))
        else:
            rows.append((name, str(value)))
    return rows


def _emit(doc, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dump_document(doc))
    elif isinstance(doc, dict):
        out.write(_render_table(_flatten(doc)))
    else:
        out.write(str(doc) + "\n")


# ------------------------------------------------------------------ commands


def _braid_doc(x) -> dict:
    return {"word": print_braid(x), "w": format_word(x.w), "g": _klein(x.g), "k": x.k}


def cmd_normalize(args, out) -> int:
    _emit(_braid_doc(parse_braid(args.word)), args.format, out)
    return EXIT_OK


def cmd_mul(args, out) -> int:
    x = b_mul(parse_braid(args.left), parse_braid(args.right))
    _emit(_braid_doc(x), args.format, out)
    return EXIT_OK


def cmd_inv(args, out) -> int:
    _emit(_braid_doc(b_inv(parse_braid(args.word))), args.format, out)
    return EXIT_OK


def _load(path: str) -> MapDescriptor:
    return parse_map_file(Path(path).read_text(encoding="utf-8"))


def cmd_check(args, out) -> int:
    doc, code = build_report(_load(args.mapfile))
    keep = ("valid", "split", "type", "params", "constraints")
    _emit({k: doc[k] for k in keep}, args.format, out)
    return EXIT_INVALID if code == EXIT_INVALID else EXIT_OK


def cmd_classify(args, out) -> int:
    doc, code = build_report(_load(args.mapfile))
    _emit({k: doc[k] for k in ("valid", "split", "type")}, args.format, out)
    return EXIT_INVALID if code == EXIT_INVALID else EXIT_OK


def cmd_lift(args, out) -> int:
    doc, code = build_report(_load(args.mapfile))
    _emit({k: doc[k] for k in ("valid", "split", "type", "f1", "f2")}, args.format, out)
    return code if code in (EXIT_INVALID, EXIT_SPLIT) else EXIT_OK


def cmd_nielsen(args, out) -> int:
    doc, code = build_report(_load(args.mapfile))
    _emit(doc, args.format, out)
    return code


def _family_grid(family: str, args) -> list[tuple[str, dict, MapDescriptor]]:
    fn, names = FIXTURE_FAMILIES[family]
    ranges = [getattr(args, n) for n in names]
    cells = []
    for values in product(*ranges):
        kw = dict(zip(names, values))
        if kw["z"] % 2 == 0:
            continue
        tag = "_".join(f"{n}{v}" for n, v in kw.items())
        cells.append((f"{family.replace('-', '_')}_{tag}", kw, fn(**kw)))
    return cells


def cmd_fixtures(args, out) -> int:
    cells = _family_grid(args.family, args)
    if args.out:
        target = Path(args.out)
        target.mkdir(parents=True, exist_ok=True)
        for name, kw, d in cells:
            (target / f"{name}.map").write_text(format_map_file(d, f"{args.family} {kw}"))
        out.write(f"wrote {len(cells)} files to {target}\n")
    else:
        out.write("\n".join(format_map_file(d, name) for name, _, d in cells))
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    families = list(FIXTURE_FAMILIES) if args.family == "all" else [args.family]
    cells = [c for fam in families for c in _family_grid(fam, args)]
    if not cells:
        _emit({"rows": [], "cells": 0, "disagreements": 0}, args.format, out)
        return EXIT_OK
    params = [extract_params(d) for _, _, d in cells]
    formula = nielsen_numbers(np.array([params_row(p) for p in params], dtype=np.int64))
    rows = []
    bad = 0
    for (name, kw, d), p, nf in zip(cells, params, formula):
        nr = nielsen_report(d)
        agree = int(nf) == nr.n_coincidence == nr.n_formula
        bad += not agree
        rows.append({"name": name, **kw, "type": p.map_class.value, "formula": int(nf),
                     "coincidence": nr.n_coincidence, "agree": agree, "zero": nr.zero})
    if args.format == "json":
        out.write(dump_document({"rows": rows, "cells": len(rows), "disagreements": bad}))
    else:
        cols = ["name", "type", "formula", "coincidence", "agree", "zero"]
        table = [cols] + [[str(r[c]).lower() if isinstance(r[c], bool) else str(r[c])
                           for c in cols] for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
        for row in table:
            out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")
        out.write(f"{len(rows)} cells, {bad} disagreements\n")
    return EXIT_DISAGREE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="kleinbraid",
                     description="Braids on the Klein bottle and Nielsen numbers of 2-valued maps.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", parents=[fmt], help="normal form of a braid word")
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)
    p = sub.add_parser("mul", parents=[fmt], help="product of two braid words")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)
    p = sub.add_parser("inv", parents=[fmt], help="inverse of a braid word")
    p.add_argument("word")
    p.set_defaults(func=cmd_inv)

    for name, func, text in (
        ("check", cmd_check, "homomorphism test and parameter constraints"),
        ("classify", cmd_classify, "map type (Split, A, B0, B1)"),
        ("lift", cmd_lift, "lift factors and Borsuk-Ulam flags"),
        ("nielsen", cmd_nielsen, "Nielsen number by both routes"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=text)
        p.add_argument("mapfile")
        p.set_defaults(func=func)

    def grid_args(p, default_family=None):
        p.add_argument("--x", type=parse_range, default=[0])
        p.add_argument("--y", type=parse_range, default=[0])
        p.add_argument("--z", type=parse_range, default=[1])
        p.add_argument("--l", type=parse_range, default=[0])

    p = sub.add_parser("fixtures", help="write descriptor files for a fixture family")
    p.add_argument("family", choices=sorted(FIXTURE_FAMILIES))
    grid_args(p)
    p.add_argument("--out", help="directory for .map files (default: stdout)")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("sweep", parents=[fmt], help="Nielsen cross-check over fixture grids")
    p.add_argument("--family", choices=["all", *sorted(FIXTURE_FAMILIES)], default="all")
    grid_args(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (WordSyntaxError, ExponentOverflow) as exc:
        err.write(f"syntax error: {exc}\n")
        return EXIT_SYNTAX
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_SYNTAX
    except KleinBraidError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_DISAGREE


def run_command(argv) -> tuple[int, str]:
    """Run the CLI in-process and return ``(exit_code, stdout_text)``."""
    buf = io.StringIO()
    code = main(list(argv), out=buf, err=io.StringIO())
    return code, buf.getvalue()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
