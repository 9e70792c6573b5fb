"""Command-line front end.

Subcommands: ``word`` (parse, decompose, cancel units), ``check`` (full law
suite on a model file), ``central`` (central morphisms and their addition
table), ``coherence`` (coherence sweeps only).  Exit codes: 0 all good,
1 at least one law failed, 2 bad input, 3 unsupported word length.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .centrality import central_hom, central_monoid, check_linearity_theorem
from .checks import (CheckReport, check_prelinear, check_structure,
                     check_transformer, is_lineariser)
from .errors import LinearcatError, ModelFileError, ParseError
from .matrices import coherence_identity_check
from .models import Model, load_model
from .sweeps import coherence_sweep, equal_length_pairs, unit_square_sweep
from .terms import PARTIALLY_LINEAR, PRELINEAR, render_term, unit_cancel
from .words import (attachment_sequence, core_split, is_unit_free, length,
                    parse_word, render_word)

SCHEMA_VERSION = 1


def _mode_arg(value: str) -> str:
    return {"prelinear": PRELINEAR, "partially-linear": PARTIALLY_LINEAR,
            "partially_linear": PARTIALLY_LINEAR}.get(value) or _bad_mode(value)


def _bad_mode(value: str):
    raise argparse.ArgumentTypeError(f"unknown mode {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linearcat",
        description="word calculus and model checking for categories with"
                    " linked sum and product structures")
    sub = parser.add_subparsers(dest="command", required=True)

    p_word = sub.add_parser("word", help="parse and decompose a word")
    p_word.add_argument("text", help='word text, e.g. "(_+0)"')
    _common_flags(p_word, model=False)

    p_check = sub.add_parser("check", help="run the full verification suite")
    _common_flags(p_check)

    p_central = sub.add_parser("central", help="central morphisms Z(X, Y)")
    p_central.add_argument("x", help="source object name")
    p_central.add_argument("y", help="target object name")
    _common_flags(p_central)

    p_coh = sub.add_parser("coherence", help="coherence sweeps only")
    _common_flags(p_coh)
    return parser


def _common_flags(p: argparse.ArgumentParser, model: bool = True) -> None:
    if model:
        p.add_argument("--model", required=True, help="path to a model file")
        p.add_argument("--mode", type=_mode_arg, default=PRELINEAR,
                       help="prelinear | partially-linear (default prelinear)")
        p.add_argument("--depth", type=int, default=6,
                       help="canonical term search depth (default 6)")
        p.add_argument("--max-size", type=int, default=3,
                       help="largest object size used in sweeps (default 3)")
        p.add_argument("--max-units", type=int, default=3,
                       help="unit-leaf budget for word corpora (default 3)")
        p.add_argument("--mixed-stride", type=int, default=8,
                       help="thinning stride for one-unit word pairs (default 8)")
        p.add_argument("--heavy-stride", type=int, default=16,
                       help="thinning stride for unit-heavy words (default 16)")
    p.add_argument("--format", choices=("text", "structured"), default="text",
                   help="output format (default text)")


def _report_dict(r: CheckReport) -> dict:
    out = {"law": r.law, "passed": r.passed}
    if r.counterexample:
        out["counterexample"] = r.counterexample
    if r.details:
        out["details"] = r.details
    return out


def _grid(rows) -> str:
    cells = [[",".join(str(v) for v in entry) for entry in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(
        "    [ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _emit(args, doc: dict, reports: list[CheckReport]) -> None:
    if args.format == "structured":
        doc = dict(doc)
        doc["schema_version"] = SCHEMA_VERSION
        doc["reports"] = [_report_dict(r) for r in reports]
        doc["summary"] = {"total": len(reports),
                          "failed": sum(not r.passed for r in reports)}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(str(r))
            if not r.passed and r.counterexample:
                for key in ("matrix", "got", "want"):
                    if key in r.counterexample:
                        print(f"  {key}:")
                        print(_grid(r.counterexample[key]))
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports)} checks, {failed} failed")


def cmd_word(args) -> int:
    try:
        w = parse_word(args.text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    n = length(w)
    info = {
        "word": render_word(w),
        "length": n,
        "unit_free": is_unit_free(w),
    }
    if n > 2:
        if args.format == "structured":
            info["schema_version"] = SCHEMA_VERSION
            info["error"] = "unit cancellation is only defined for length <= 2"
            print(json.dumps(info, indent=2, sort_keys=True))
        else:
            print(f"word:      {info['word']}")
            print(f"length:    {n}")
            print("unit cancellation is only defined for length <= 2",
                  file=sys.stderr)
        return 3
    if n == 1:
        info["attachments"] = [
            {"op": a.op, "unit_word": render_word(a.unit_word), "side": a.side}
            for a in attachment_sequence(w)]
    elif n == 2:
        split = core_split(w)
        info["core"] = {
            "w1": render_word(split.w1), "op": split.op,
            "w2": render_word(split.w2),
            "attachments": [
                {"op": a.op, "unit_word": render_word(a.unit_word), "side": a.side}
                for a in split.attachments]}
    cancel = unit_cancel(w)
    info["cancellation"] = render_term(cancel)
    info["cancellation_target"] = render_word(cancel.target)
    if args.format == "structured":
        info["schema_version"] = SCHEMA_VERSION
        print(json.dumps(info, indent=2, sort_keys=True))
    else:
        print(f"word:        {info['word']}")
        print(f"length:      {n}")
        print(f"unit free:   {str(info['unit_free']).lower()}")
        if "attachments" in info:
            for a in info["attachments"]:
                print(f"attachment:  ({a['op']}, {a['unit_word']}, {a['side']})")
        if "core" in info:
            c = info["core"]
            print(f"core:        {c['w1']} {c['op']} {c['w2']}")
            for a in c["attachments"]:
                print(f"attachment:  ({a['op']}, {a['unit_word']}, {a['side']})")
        print(f"cancel:      {info['cancellation']}")
        print(f"target:      {info['cancellation_target']}")
    return 0


def _sweep_objects(model: Model, max_size: int):
    objs = [o for o in model.base_objects if o.size <= max_size]

    def objects_for(n: int):
        return list(itertools.product(objs, repeat=n))

    return objs, objects_for


def _coherence_reports(model: Model, args) -> list[CheckReport]:
    reports: list[CheckReport] = []
    coh_objs = [o for o in model.base_objects if o.size <= min(args.max_size, 2)]
    for n in (1, 2, 3):
        passed = True
        ce = None
        for tup in itertools.product(coh_objs, repeat=n):
            r = coherence_identity_check(model, n, tup, args.depth, PRELINEAR)
            if not r.passed:
                passed, ce = False, r.counterexample
                break
        reports.append(CheckReport(f"coherence-identity-matrix/n={n}", passed, ce))
    _, objects_for = _sweep_objects(model, min(args.max_size, 2))
    if args.mode == PARTIALLY_LINEAR:
        for n in (0, 1, 2):
            corpus = equal_length_pairs(n, args.max_units, args.mixed_stride,
                                        args.heavy_stride)
            reports.append(coherence_sweep(
                model, corpus, objects_for, args.depth, PARTIALLY_LINEAR,
                law=f"coherence/partially-linear/n={n}"))
    corpus = equal_length_pairs(2, args.max_units, args.mixed_stride,
                                args.heavy_stride)
    reports.append(unit_square_sweep(model, corpus, objects_for,
                                     min(args.depth, 4), PRELINEAR))
    return reports


def cmd_check(args) -> int:
    try:
        model = load_model(args.model)
    except ModelFileError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 2
    reports = []
    reports.extend(check_structure(model))
    reports.extend(check_transformer(model))
    reports.extend(check_prelinear(model))
    lin, lin_data = is_lineariser(model)
    reports.append(CheckReport("lineariser", True, None,
                               {"lineariser": lin,
                                **({} if lin else {"witness": lin_data})}))
    reports.extend(_coherence_reports(model, args))
    try:
        reports.append(check_linearity_theorem(model))
    except LinearcatError as exc:
        reports.append(CheckReport("linearity-theorem", False,
                                   {"error": str(exc)}))
    _emit(args, {"command": "check", "model": args.model,
                 "parameters": _params(args)}, reports)
    return 0 if all(r.passed for r in reports) else 1


def cmd_coherence(args) -> int:
    try:
        model = load_model(args.model)
    except ModelFileError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 2
    reports = _coherence_reports(model, args)
    _emit(args, {"command": "coherence", "model": args.model,
                 "parameters": _params(args)}, reports)
    return 0 if all(r.passed for r in reports) else 1


def _params(args) -> dict:
    return {"mode": args.mode, "depth": args.depth, "max_size": args.max_size,
            "max_units": args.max_units, "mixed_stride": args.mixed_stride,
            "heavy_stride": args.heavy_stride}


def cmd_central(args) -> int:
    try:
        model = load_model(args.model)
    except ModelFileError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 2
    try:
        x = model.object_by_name(args.x)
        y = model.object_by_name(args.y)
    except KeyError as exc:
        print(f"object error: {exc}", file=sys.stderr)
        return 2
    elements = central_hom(model, x, y)
    doc = {"command": "central", "model": args.model,
           "x": args.x, "y": args.y,
           "central": [list(m.graph) for m in elements]}
    lines = [f"Z({args.x}, {args.y}): {len(elements)} central morphism(s)"]
    for k, m in enumerate(elements):
        lines.append(f"  z{k}: {list(m.graph)}")
    lin, lin_data = is_lineariser(model)
    doc["lineariser"] = lin
    if lin:
        cm = central_monoid(model, x, y)
        doc["addition_table"] = [list(row) for row in cm.table]
        doc["unit_index"] = cm.unit_index
        doc["commutative_observed"] = cm.commutative
        lines.append(f"addition table (unit z{cm.unit_index}):")
        header = "      " + " ".join(f"z{k}".rjust(3) for k in range(len(cm.elements)))
        lines.append(header)
        for k, row in enumerate(cm.table):
            lines.append(f"  z{k}: " + " ".join(f"z{v}".rjust(3) for v in row))
        lines.append(f"commutative (observed): {str(cm.commutative).lower()}")
    else:
        doc["witness"] = lin_data
        lines.append(f"no lineariser: {lin_data['reason']}")
    if args.format == "structured":
        doc["schema_version"] = SCHEMA_VERSION
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for field, minimum in (("depth", 1), ("max_size", 1), ("max_units", 0),
                           ("mixed_stride", 1), ("heavy_stride", 1)):
        if getattr(args, field, minimum) < minimum:
            print(f"argument error: --{field.replace('_', '-')} must be"
                  f" at least {minimum}", file=sys.stderr)
            return 2
    handler = {"word": cmd_word, "check": cmd_check,
               "central": cmd_central, "coherence": cmd_coherence}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
