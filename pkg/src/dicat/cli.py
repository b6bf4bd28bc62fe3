"""Command-line front end: ``dicat <command> FILE [options]``.

Exit status is 0 when every requested check passes, 1 when a law fails
(the report is still written) and 2 on unreadable or ill-formed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import Budget, DicatError, LawReport, Product
from .dinat import (DinaturalTransformation, check_dimodification, check_dinatural, compose_dinat_nat,
                    compose_nat_dinat, diagonalize_natural, is_difunctor, same_components)
from .dsl import DslError, ElaborationError, Workspace, load
from .extranat import check_adjoint_fold, connector_boundary, eilenberg_kelly_graph, format_boundary
from .render import RenderError, render_connector, render_disk, render_square
from .transform import NaturalTransformation, check_natural, check_strict_natural, compose_natural

PROARROW_KINDS = ("relation", "profunctor", "proarrow")
ARROW_KINDS = ("function", "functor", "arrow")


class InputError(Exception):
    """Bad command-line input; reported with exit status 2."""


def _budget(args) -> Budget:
    b = Budget(seed=args.seed)
    if args.budget is not None:
        b.per_law = args.budget
    return b


def _select(ws: Workspace, kinds, name: str | None) -> dict:
    found = {n: v for kind in kinds for n, v in ws.named(kind).items()}
    found = {n: found[n] for n in ws.order if n in found}
    if name is not None:
        if name not in found:
            raise InputError(f"no {' or '.join(kinds)} named {name}")
        return {name: found[name]}
    if not found:
        raise InputError(f"the document declares no {' or '.join(kinds)}")
    return found


def _result(target: str, kind: str, reports: list[LawReport], summary: dict | None = None) -> dict:
    out = {"target": target, "kind": kind, "passed": all(r.passed for r in reports),
           "reports": [r.to_json() for r in reports]}
    if summary is not None:
        out["summary"] = summary
    return out


def _check_transformation(t, budget: Budget, strict: bool) -> list[LawReport]:
    if isinstance(t, NaturalTransformation):
        reports = check_natural(t, budget)
        return reports + [check_strict_natural(t, budget)] if strict else reports
    if strict and t.orientation != "strict":
        t = _with_orientation(t, "strict")
    return check_dinatural(t, budget)


def _with_orientation(t: DinaturalTransformation, orientation: str) -> DinaturalTransformation:
    import copy
    out = copy.copy(t)
    out.orientation = orientation
    return out


def _kind(t) -> str:
    return "natural" if isinstance(t, NaturalTransformation) else "dinatural"


# ---------------------------------------------------------------------------
# commands; each returns a JSON-ready document


def cmd_check_instance(ws, args):
    from .core import check_axioms
    return [_result(ws.dc.name, "instance", check_axioms(ws.dc, _budget(args)))]


def cmd_check_natural(ws, args):
    return [_result(n, "natural", _check_transformation(t, _budget(args), args.strict))
            for n, t in _select(ws, ("natural",), args.name).items()]


def cmd_check_dinatural(ws, args):
    return [_result(n, "dinatural", _check_transformation(t, _budget(args), args.strict))
            for n, t in _select(ws, ("dinatural",), args.name).items()]


def cmd_check_dimod(ws, args):
    return [_result(n, "dimodification", check_dimodification(t, _budget(args)))
            for n, t in _select(ws, ("dimodification",), args.name).items()]


def cmd_diagonalize(ws, args):
    budget = _budget(args)
    out = []
    chosen = _select(ws, ("natural",), args.name)
    if args.name is None:
        # without --name, only naturals between difunctors are candidates
        chosen = {n: a for n, a in chosen.items() if is_difunctor(a.source) and is_difunctor(a.target)}
        if not chosen:
            raise InputError("the document declares no natural transformation between difunctors")
    for n, alpha in chosen.items():
        forms = [1, 2] if args.form == "both" else [int(args.form)]
        dis = {}
        for form in forms:
            try:
                dis[form] = diagonalize_natural(alpha, form)
            except DicatError as exc:
                raise InputError(f"cannot diagonalize {n}: {exc}") from None
        reports = []
        for form, di in dis.items():
            for r in _check_transformation(di, budget, args.strict):
                r.law_id = f"form{form}:{r.law_id}"
                reports.append(r)
        if len(dis) == 2:
            reports.append(same_components(dis[1], dis[2], budget, "diagonalize:forms-agree"))
        out.append(_result(n, "diagonalization", reports, {"forms": forms}))
    return out


def cmd_compose(ws, args):
    first, second = (_select(ws, ("natural", "dinatural"), x)[x] for x in (args.first, args.second))
    try:
        if isinstance(first, NaturalTransformation) and isinstance(second, NaturalTransformation):
            t = compose_natural(first, second)
        elif isinstance(first, NaturalTransformation):
            t = compose_nat_dinat(first, second)
        elif isinstance(second, NaturalTransformation):
            t = compose_dinat_nat(first, second)
        else:
            raise InputError("two dinatural transformations do not compose")
    except DicatError as exc:
        raise InputError(str(exc)) from None
    reports = _check_transformation(t, _budget(args), args.strict)
    return [_result(f"{args.first};{args.second}", _kind(t), reports)]


def cmd_zigzag(ws, args):
    budget = _budget(args)
    try:
        A = ws.object(args.object)
    except ElaborationError:
        raise InputError(f"no object named {args.object}") from None
    z = ws.zigzags
    D = ws.dc
    out = []
    for label, t in (("S", z.S), ("Z", z.Z)):
        comp = t.obj(A)
        unit = D.unit(A) if label == "S" else D.unit(ws.structure.dual.obj(A))
        summary = {"object": args.object, "component": D.describe(comp), "equals_unit": bool(D.eq(comp, unit)),
                   "beads": [b for b, _ in t.beads(D.unit(A))] if hasattr(t, "beads") else []}
        out.append(_result(label, "natural", check_natural(t, budget), summary))
    reports = check_adjoint_fold(ws.adjoint, budget)
    verdict = "pass" if all(r.passed for r in reports) else "fail"
    out.append(_result("adjoint-fold", "adjoint-fold", reports, {"object": args.object, "verdict": verdict}))
    return out


def cmd_connector_graph(ws, args):
    out = []
    for n, word in _select(ws, ("connector",), args.name).items():
        src, tgt = connector_boundary(word)
        out.append({"target": n, "word": str(word),
                    "boundary": {"source": format_boundary(src), "target": format_boundary(tgt)},
                    "graph": eilenberg_kelly_graph(word).to_json()})
    return out


def _proarrow_at(ws: Workspace, base, at: str | None):
    """A proarrow of ``base`` named by --at: declared proarrow cells, or an object for its unit."""
    names = at.split(",") if at else []
    if not names:
        declared = [n for n in ws.order if ws.kinds[n] in PROARROW_KINDS]
        names = declared[:1] or [n for n in ws.order if ws.kinds[n] in ("set", "category", "object")][:1]
        if not names:
            raise InputError("nothing to evaluate the component at; pass --at")
    cells = []
    for n in names:
        n = n.strip()
        if ws.kinds.get(n) in PROARROW_KINDS:
            cells.append(ws.values[n])
        elif ws.kinds.get(n) in ("set", "category", "object"):
            cells.append(ws.dc.unit(ws.values[n]))
        else:
            raise InputError(f"--at {n}: not a proarrow or object of the document")
    if isinstance(base, Product):
        if len(cells) == 1:
            cells = cells * 2
        if len(cells) != 2:
            raise InputError("--at needs one or two proarrows for a transformation over a pairing")
        return tuple(cells)
    if len(cells) != 1:
        raise InputError("--at needs a single proarrow here")
    return cells[0]


def cmd_render(ws, args) -> str:
    name = args.target
    if name in ("instance", ws.kind):
        raise RenderError(f"cannot render the whole {ws.kind} instance; name a cell or transformation")
    if name not in ws.kinds:
        raise InputError(f"no declaration named {name}")
    kind, value = ws.kinds[name], ws.values[name]
    D = ws.dc
    if kind == "connector":
        return render_connector(value, name)
    if kind == "square":
        return render_square(D, value, name)
    if kind in PROARROW_KINDS:
        return render_square(D, D.id_square_pro(value), f"id {name}")
    if kind in ARROW_KINDS:
        return render_square(D, D.id_square_arrow(value), f"id {name}")
    if kind in ("natural", "dinatural"):
        base = value.domain if kind == "natural" else value.base
        m = _proarrow_at(ws, base, args.at)
        if hasattr(value, "beads"):
            return render_disk(value.beads(m), title=f"{name} at {args.at or 'default'}")
        return render_square(value.codomain, value.proarrow(m), name)
    if kind in ("modification", "dimodification"):
        objs = [ws.values[n] for n in ws.order if ws.kinds[n] in ("set", "category", "object")]
        if args.at:
            obj = ws.object(args.at)
        elif objs:
            obj = objs[0]
        else:
            raise InputError("pass --at OBJECT")
        key = (obj, obj) if kind == "modification" and isinstance(value.domain, Product) else obj
        return render_square(value.codomain, value.obj(key), name)
    raise RenderError(f"{name} is a {kind}; only cells and transformation components have a picture")


COMMANDS = {
    "check-instance": cmd_check_instance, "check-natural": cmd_check_natural,
    "check-dinatural": cmd_check_dinatural, "check-dimod": cmd_check_dimod, "diagonalize": cmd_diagonalize,
    "compose": cmd_compose, "zigzag": cmd_zigzag, "connector-graph": cmd_connector_graph, "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicat", description="Check double-categorical laws on finite instances.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="a .dicat document")
    common.add_argument("--out", help="write the output here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled law instances (default 0)")
    common.add_argument("--budget", type=int, help="maximum sampled instances per law")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--strict", action="store_true", help="demand identity disks")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("check-instance", parents=[common], help="double category axioms")
    for cmd, what in (("check-natural", "natural transformations"), ("check-dinatural", "dinatural transformations"),
                      ("check-dimod", "dimodifications"), ("connector-graph", "connector pairing graphs")):
        p = sub.add_parser(cmd, parents=[common], help=what)
        p.add_argument("--name", help="only this declaration")
    p = sub.add_parser("diagonalize", parents=[common], help="diagonalize natural transformations and check")
    p.add_argument("--name")
    p.add_argument("--form", choices=("1", "2", "both"), default="both")
    p = sub.add_parser("compose", parents=[common], help="compose two transformations and check the result")
    p.add_argument("first")
    p.add_argument("second")
    p = sub.add_parser("zigzag", parents=[common], help="zigzag transformations and the adjoint fold")
    p.add_argument("--object", required=True)
    p = sub.add_parser("render", parents=[common], help="SVG string diagram of a cell or component")
    p.add_argument("--target", required=True)
    p.add_argument("--at", help="proarrow (or object) at which to take the component")
    return parser


def _text(doc: dict) -> str:
    lines = [f"{doc['command']} {doc['file']} ({doc['instance']})"]
    for res in doc["results"]:
        if "reports" not in res:
            lines.append(f"  {res['target']}: {res['word']}  {res['boundary']['source']} -> "
                         f"{res['boundary']['target']}")
            lines += [f"    {e['kind']} {e['ends'][0][0]}{e['ends'][0][1]} - {e['ends'][1][0]}{e['ends'][1][1]}"
                      for e in res["graph"]["edges"]]
            continue
        lines.append(f"  {res['target']} ({res['kind']}): {'pass' if res['passed'] else 'FAIL'}")
        for key, value in res.get("summary", {}).items():
            lines.append(f"    {key}: {json.dumps(value, ensure_ascii=False, default=str)}")
        for r in res["reports"]:
            mark = "pass" if r["status"] == "pass" else "FAIL"
            extra = "" if r["exhaustive"] else ", sampled"
            lines.append(f"    {mark} {r['law_id']} ({r['checked']} checked{extra})")
            if "witness" in r:
                lines.append(f"      witness: {json.dumps(r['witness'], ensure_ascii=False, default=str)}")
    if "passed" in doc:
        lines.append(f"result: {'pass' if doc['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        try:
            source = Path(args.file).read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
        ws = load(source)
        if args.command == "render":
            _emit(cmd_render(ws, args), args.out)
            return 0
        results = COMMANDS[args.command](ws, args)
    except DslError as exc:
        print(f"{args.file}:{exc}", file=sys.stderr)
        return 2
    except (InputError, RenderError) as exc:
        print(f"dicat: {exc}", file=sys.stderr)
        return 2
    except DicatError as exc:
        print(f"dicat: {args.file}: {exc}", file=sys.stderr)
        return 2
    doc = {"command": args.command, "file": args.file, "instance": ws.kind, "seed": args.seed,
           "budget": _budget(args).per_law, "strict": args.strict, "results": results}
    checks = [r for r in results if "passed" in r]
    if checks:
        doc["passed"] = all(r["passed"] for r in checks)
    if args.format == "json":
        text = json.dumps(doc, indent=2, ensure_ascii=False, default=str) + "\n"
    else:
        text = _text(doc)
    _emit(text, args.out)
    return 0 if doc.get("passed", True) else 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
