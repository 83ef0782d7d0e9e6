"""Command-line entry point: ``tcat <subcommand> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
malformed input.  ``--json`` prints the whole report as one JSON document.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from .cocycles import Cocycle3, CocycleError, standard_cocycle
from .cyclotomic import CycNumber

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed user input; reported with exit status 2."""


@dataclass
class Check:
    name: str
    ok: bool
    witness: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "witness": self.witness}


@dataclass
class Report:
    command: str
    payload: Any = None
    lines: list[str] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    error: str | None = None
    exit_status: int | None = None

    def check(self, name: str, ok: bool, witness: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), witness))
        return bool(ok)

    @property
    def status(self) -> int:
        if self.exit_status is not None:
            return self.exit_status
        if self.error is not None:
            return EXIT_INPUT
        return EXIT_OK if all(c.ok for c in self.checks) else EXIT_FAIL

    def to_json(self) -> dict:
        out = {"command": self.command, "payload": self.payload,
               "checks": [c.to_json() for c in self.checks], "exit": self.status}
        if self.error is not None:
            out["error"] = self.error
        return out

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.to_json(), indent=2)
        out = list(self.lines)
        if self.error is not None:
            out.append(f"error: {self.error}")
        out.extend(f"FAILED {c.name}: {c.witness}".rstrip(": ") for c in self.checks if not c.ok)
        return "\n".join(out)


def _s(x: CycNumber) -> str:
    return str(x)


def _cocycle(args) -> Cocycle3:
    try:
        return standard_cocycle(args.n, args.p)
    except CocycleError as exc:
        raise InputError(str(exc)) from exc


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


# subcommands ---------------------------------------------------------------------------

def cmd_pentagon(args, rep: Report) -> None:
    from .fusion import FusionData, StructureError, pentagon_check
    obj = _read_json(args.input)
    try:
        if isinstance(obj, dict) and "omega" in obj:
            w = Cocycle3.from_json(obj)
            n = w.n
            N = {(str(a), str(b), str((a + b) % n)): 1 for a in range(n) for b in range(n)}
            C = FusionData.from_entries([str(a) for a in range(n)], ["0"], N,
                                        lambda a, b, c, d, e, f: w(int(a), int(b), int(c)), validate=False)
        else:
            C = FusionData.from_json(obj)
        report = pentagon_check(C)
    except (StructureError, CocycleError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    rep.payload = {"simples": list(C.simples), "instances": report.instances,
                   "violations": [list(v) for v in report.violations]}
    rep.lines.append(f"simples: {' '.join(C.simples)}")
    rep.lines.append(f"pentagon instances: {report.instances}")
    rep.lines.append(f"violations: {len(report.violations)}")
    for v in report.violations[:10]:
        rep.lines.append(f"  violation at ({','.join(v)})")
    rep.check("pentagon", report.ok, "" if report.ok else f"({','.join(report.violations[0])})")


def cmd_classify_rank2(args, rep: Report) -> None:
    from .fusion import classify_rank2, gauge_equivalent, pointed_category
    bound = args.root_bound or 8
    classes = classify_rank2(bound)
    vec = pointed_category(standard_cocycle(2, 0))
    vecw = pointed_category(standard_cocycle(2, 1))
    payload = []
    for i, C in enumerate(classes):
        x = C.omega("1", "1", "1")
        name = "Vec_Z2" if gauge_equivalent(C, vec, bound) else (
            "VecOmega_Z2" if gauge_equivalent(C, vecw, bound) else "unknown")
        payload.append({"class": i, "F(1,1,1)": _s(x), "equivalent_to": name})
        rep.lines.append(f"class {i}: F(1,1,1)={x} equivalent_to={name}")
    rep.payload = {"root_bound": bound, "classes": payload}
    rep.check("exactly 2 gauge classes", len(classes) == 2, str(len(classes)))
    names = sorted(p["equivalent_to"] for p in payload)
    rep.check("classes are Vec_Z2 and VecOmega_Z2", names == ["VecOmega_Z2", "Vec_Z2"], ",".join(names))
    rep.check("Vec_Z2 not equivalent to VecOmega_Z2", gauge_equivalent(vec, vecw, bound) is None)


def cmd_center(args, rep: Report) -> None:
    from .center import drinfeld_center
    w = _cocycle(args)
    simples = drinfeld_center(w)
    rep.payload = {"n": args.n, "p": args.p, "simples": [
        {"g": s.g, "chi": [_s(c) for c in s.chi], "theta": _s(s.theta)} for s in simples]}
    rep.lines.extend(s.describe() for s in simples)
    rep.check("|Z(C)| = n^2", len(simples) == args.n ** 2, str(len(simples)))
    rep.check("theta = chi(g)", all(s.theta == s.chi[s.g] for s in simples))


def cmd_ind_order(args, rep: Report) -> None:
    from .center import canonical_automorphism_order
    from .fusion import pivotal_structures, pointed_category
    w = _cocycle(args)
    label = str(args.simple)
    if label not in {str(a) for a in range(args.n)}:
        raise InputError(f"unknown simple {label!r} for Z/{args.n}")
    order = canonical_automorphism_order(w, label)
    per_structure = []
    for P in pivotal_structures(pointed_category(w), args.root_bound):
        if P.spherical:
            per_structure.append(canonical_automorphism_order(w, label, P))
    rep.payload = {"n": args.n, "p": args.p, "simple": label, "order": order,
                   "orders_per_spherical_structure": per_structure}
    rep.lines.append(str(order))
    rep.check("order independent of the spherical structure", set(per_structure) <= {order},
              ",".join(map(str, per_structure)))


def cmd_convcat(args, rep: Report) -> None:
    from .convolution import (ConvCatSpec, ConvSpecError, conv_category, corner_category,
                              equivariantization_split, indecomposable, reconstruct, unit_idempotents)
    from .fusion import StructureError
    try:
        spec = ConvCatSpec.from_json(_read_json(args.spec))
        C = conv_category(spec)
    except ConvSpecError as exc:
        raise InputError(str(exc)) from exc
    payload: dict = {"simples": list(C.simples), "unit": unit_idempotents(C),
                     "indecomposable": indecomposable(C)}
    rep.lines.append(f"simples ({len(C.simples)}): {' '.join(C.simples)}")
    rep.lines.append(f"unit summands: {' '.join(C.unit)}")
    rep.lines.append(f"indecomposable: {indecomposable(C)}")
    bound = args.root_bound or 8
    if args.split:
        if spec.n is None:
            raise InputError("--split needs a group action in the input file")
        res = equivariantization_split(spec, bound)
        payload["split"] = {"model_simples": list(res.model.simples), "bijection": res.relabel,
                            "gauge_found": res.gauge is not None}
        rep.lines.append(f"split model simples ({len(res.model.simples)}): {' '.join(res.model.simples)}")
        for k in sorted(res.relabel):
            rep.lines.append(f"  {k} -> {res.relabel[k]}")
        rep.check("equivariantization split is a gauge equivalence", res.gauge is not None)
    for e, what in ((args.corner, "corner"), (args.reconstruct, "reconstruct")):
        if e is None:
            continue
        if e not in C.unit:
            raise InputError(f"{e} is not a unit summand")
        if what == "corner":
            D = corner_category(C, e)
            payload["corner"] = {"unit": e, "simples": list(D.simples)}
            rep.lines.append(f"corner at {e}: {' '.join(D.simples)}")
        else:
            try:
                res = reconstruct(C, e, args.root_bound)
            except StructureError as exc:
                rep.check("reconstruction", False, str(exc))
                continue
            payload["reconstruct"] = {"unit": e, "simples": list(res.category.simples),
                                      "ring_isomorphism": res.relabel, "gauge_checked": res.gauge_checked,
                                      "gauge_found": res.gauge is not None}
            rep.lines.append(f"reconstruction at {e}: {len(res.category.simples)} simple module endofunctors")
            for k in sorted(res.relabel):
                rep.lines.append(f"  {k} -> {res.relabel[k]}")
            rep.check("reconstruction has the same fusion ring", res.relabel is not None)
            if res.gauge_checked:
                rep.check("reconstruction is gauge equivalent", res.gauge is not None)
    rep.payload = payload


def _base_category(args):
    from .fusion import pointed_category
    return pointed_category(_cocycle(args))


def cmd_modcats(args, rep: Report) -> None:
    from .modules import UnsupportedCategory, module_categories
    C = _base_category(args)
    try:
        res = module_categories(C, args.max_rank, args.root_bound)
    except UnsupportedCategory as exc:
        raise InputError(str(exc)) from exc
    classes = []
    for i, M in enumerate(res.solutions):
        d = M.describe()
        classes.append(d)
        scalars = " ".join(f"mu{k}={v}" for k, v in d["mu"].items()) or "mu=1"
        rep.lines.append(f"class {i}: rank={M.rank} {scalars}")
    for ob in res.obstructions:
        witness = "" if ob.witness is None else f" witness=({','.join(ob.witness)})"
        rep.lines.append(f"obstructed: rank={ob.rank}{witness}")
    rep.lines.extend(f"note: {n}" for n in res.notes)
    rep.payload = {"n": args.n, "p": args.p, "max_rank": args.max_rank, "root_bound": res.root_bound,
                   "classes": classes, "complete": res.complete,
                   "obstructions": [{"rank": o.rank, "witness": list(o.witness or ())} for o in res.obstructions]}
    rep.check("classification complete within the search bound", res.complete)


def _hecke(args):
    from .coxeter import CoxeterTypeError
    from .hecke import analyze
    try:
        return analyze(args.type)
    except CoxeterTypeError as exc:
        raise InputError(str(exc)) from exc


def cmd_cells(args, rep: Report) -> None:
    from .hecke import kl_checks
    H = _hecke(args)
    W, cd = H.W, H.cells
    rep.lines.append(f"type {W.name}: |W|={W.order}, Hecke normalization (T_s - v)(T_s + v^-1) = 0")
    cells = []
    for i, c in enumerate(cd.two_sided):
        words = [W.word_str(w) for w in c]
        dist = [W.word_str(d) for d in cd.distinguished if d in c]
        cells.append({"index": i, "a": cd.cell_a(i), "elements": words, "distinguished": dist})
        rep.lines.append(f"cell {i} a={cd.cell_a(i)} size={len(c)}")
        rep.lines.append("  " + " | ".join(words))
        rep.lines.append("  distinguished: " + " | ".join(dist))
    order = sorted(cd.lr_order)
    rep.lines.append("<=_LR: " + " ".join(f"{i}<={j}" for i, j in order if i != j))
    rep.payload = {"type": W.name, "order": W.order, "cells": cells,
                   "lr_order": [list(p) for p in order]}
    for name, ok, wit in kl_checks(H.kl) + cd.checks + H.J.checks:
        rep.check(name, ok, wit)


# rank-two shorthand: s, t for the two simple reflections
_CORNER_ALIASES = {"s": "s1", "t": "s2"}


def cmd_jring(args, rep: Report) -> None:
    from .hecke import corner_ring
    H = _hecke(args)
    W, cd, J = H.W, H.cells, H.J
    if not 0 <= args.cell_index < len(cd.two_sided):
        raise InputError(f"cell index must be in [0, {len(cd.two_sided)})")
    cell = cd.two_sided[args.cell_index]
    rep.lines.append(f"type {W.name} cell {args.cell_index} a={cd.cell_a(args.cell_index)}")
    payload: dict = {"type": W.name, "cell_index": args.cell_index, "a": cd.cell_a(args.cell_index)}

    def fmt(row):
        return " + ".join((f"{c}*" if c != 1 else "") + f"t[{W.word_str(z)}]" for z, c in sorted(row.items())) or "0"

    if args.corner is None:
        table = {}
        for x in cell:
            for y in cell:
                row = J.product(x, y)
                if row:
                    table[f"{W.word_str(x)} * {W.word_str(y)}"] = fmt(row)
                    rep.lines.append(f"t[{W.word_str(x)}] t[{W.word_str(y)}] = {fmt(row)}")
        payload["table"] = table
    else:
        try:
            d = W.parse_word(_CORNER_ALIASES.get(args.corner.strip(), args.corner))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        try:
            cr = corner_ring(J, args.cell_index, d)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        payload["corner"] = {"d": W.word_str(d), "basis": [W.word_str(x) for x in cr.basis], "tag": cr.tag,
                             "table": {f"{W.word_str(x)} * {W.word_str(y)}": fmt(r) for (x, y), r in cr.table.items()}}
        rep.lines.append(f"corner at d={W.word_str(d)}: basis " + " | ".join(W.word_str(x) for x in cr.basis))
        for (x, y), r in cr.table.items():
            rep.lines.append(f"t[{W.word_str(x)}] t[{W.word_str(y)}] = {fmt(r)}")
        rep.lines.append(f"tag: {cr.tag}")
    rep.payload = payload
    for name, ok, wit in J.checks:
        rep.check(name, ok, wit)


def cmd_verify_theorem_model(args, rep: Report) -> None:
    from .center import canonical_automorphism_order
    from .convolution import ConvCatSpec, conv_category, corner_category
    from .fusion import classify_rank2, deligne_product, gauge_equivalent, pointed_category
    from .modules import endofunctor_category, module_categories, module_equivalent, regular_module
    k = args.yprime
    if k < 1:
        raise InputError("--yprime must be >= 1")
    bound = args.root_bound or 8
    w = standard_cocycle(2, 1)
    C = pointed_category(w)
    steps = []

    def step(name, ok, detail):
        rep.check(name, ok, "" if ok else detail)
        steps.append({"step": name, "ok": bool(ok), "detail": detail})
        rep.lines.append(f"[{'pass' if ok else 'FAIL'}] {name}: {detail}")

    order = canonical_automorphism_order(w, "1")
    step("order of u_(1,delta) on Ind(delta) equals 4", order == 4, f"order={order}")
    classes = classify_rank2(bound)
    step("rank-2 classification has 2 classes", len(classes) == 2, f"classes={len(classes)}")
    step("the corner candidate is not Vec_Z2",
         gauge_equivalent(C, pointed_category(standard_cocycle(2, 0)), bound) is None, "gauge search empty")
    mods = module_categories(C, 2, args.root_bound)
    reg = regular_module(C)
    only_regular = len(mods.solutions) == 1 and module_equivalent(mods.solutions[0], reg)
    step("VecOmega_Z2 has only the regular module category", only_regular and mods.complete,
         f"classes={len(mods.solutions)} ranks={[m.rank for m in mods.solutions]}")
    fun = endofunctor_category(C, reg, k, args.root_bound)
    step("Fun(M, M) has |Y'| unit summands", len(fun.unit) == k, f"units={len(fun.unit)}")
    model = deligne_product(C, conv_category(ConvCatSpec.plain(k)))
    g = gauge_equivalent(fun, model, bound)
    step("Fun(M, M) is equivalent to VecOmega_Z2 (x) Coh(Y' x Y')", g is not None,
         f"simples={len(fun.simples)}")
    corners_ok = all(gauge_equivalent(corner_category(fun, e), C, bound) is not None for e in fun.unit)
    step("every corner of Fun(M, M) is VecOmega_Z2", corners_ok, f"corners={len(fun.unit)}")
    rep.payload = {"yprime": k, "steps": steps}


# parser -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as one JSON document")
    common.add_argument("--root-bound", type=int, default=None,
                        help="order bound for root-of-unity searches")
    parser = argparse.ArgumentParser(prog="tcat", description="Exact computations with small tensor categories and Hecke algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p):
        p.add_argument("--n", type=int, default=2, help="cyclic group order")
        p.add_argument("--p", type=int, default=1, help="cohomology class of the associator")

    p = sub.add_parser("pentagon", parents=[common], help="check the pentagon for a category or cocycle file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_pentagon)
    p = sub.add_parser("classify-rank2", parents=[common], help="classify fusion categories on the Z/2 ring")
    p.set_defaults(func=cmd_classify_rank2)
    p = sub.add_parser("center", parents=[common], help="Drinfeld center simples and twists")
    group_args(p)
    p.set_defaults(func=cmd_center)
    p = sub.add_parser("ind-order", parents=[common], help="order of the canonical automorphism of Ind")
    group_args(p)
    p.add_argument("--simple", default="1")
    p.set_defaults(func=cmd_ind_order)
    p = sub.add_parser("convcat", parents=[common], help="convolution categories Coh(Y x Y)")
    p.add_argument("--spec", required=True)
    p.add_argument("--split", action="store_true")
    p.add_argument("--corner", default=None)
    p.add_argument("--reconstruct", default=None)
    p.set_defaults(func=cmd_convcat)
    p = sub.add_parser("modcats", parents=[common], help="classify module categories")
    group_args(p)
    p.add_argument("--max-rank", type=int, default=2)
    p.set_defaults(func=cmd_modcats)
    p = sub.add_parser("cells", parents=[common], help="two-sided cells and a-values")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_cells)
    p = sub.add_parser("jring", parents=[common], help="asymptotic ring of a two-sided cell")
    p.add_argument("--type", required=True)
    p.add_argument("--cell-index", type=int, required=True)
    p.add_argument("--corner", default=None, help="distinguished involution as a word, e.g. 's1'")
    p.set_defaults(func=cmd_jring)
    p = sub.add_parser("verify-theorem-model", parents=[common], help="run the model-scale equivalence chain")
    p.add_argument("--yprime", type=int, default=2)
    p.set_defaults(func=cmd_verify_theorem_model)
    return parser


def run(argv: list[str]) -> tuple[Report, bool]:
    parser = build_parser()
    rep = Report("tcat " + " ".join(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        rep.error = "invalid arguments"
        rep.exit_status = EXIT_INPUT if exc.code else EXIT_OK
        return rep, "--json" in argv
    if args.root_bound is not None and args.root_bound < 1:
        rep.error = "--root-bound must be >= 1"
        return rep, args.json
    func: Callable = args.func
    try:
        func(args, rep)
    except InputError as exc:
        rep.error = str(exc)
    return rep, args.json


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    rep, as_json = run(argv)
    text = rep.render(as_json)
    if text:
        print(text)
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
