"""``colorhom <command> <spec.json>``: validation, Hopf/Koszul checks and cohomology tables.

Exit status: 0 when every check passes, 1 when a check fails, 2 on input or
precondition errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from colorhom.ce_cohomology import (ce_delta, ce_window, check_delta_squared, check_koszul_identities,
                                    homotopy_check, lie_cohomology_dims)
from colorhom.color_lie import validate_color_lie
from colorhom.enveloping import check_hopf_axioms
from colorhom.gmodules import adjoint_module, validate_module
from colorhom.grading import validate_bicharacter
from colorhom.hochschild import bar_differentials, compare_theorem5, hochschild_dims, hochschild_window
from colorhom.reports import ValidationReport
from colorhom.scalars import ExactMatrix, format_scalar
from colorhom.spec_io import ProblemSpec, SpecError, load_spec, parse_window

COMMANDS = ("validate", "hopf-check", "koszul-check", "lie-cohomology", "hochschild", "compare")


class CommandError(Exception):
    pass


def _locate(spec: ProblemSpec, rep: ValidationReport, section: str, module: str | None = None) -> None:
    for c in rep.failures():
        ptr = None
        if section == "lie" and len(c.subjects) == 2:
            ptr = spec.bracket_pointer(*c.subjects)
        if section == "lie" and ptr is None:
            ptr = "/lie/brackets"
        if section == "bicharacter":
            ptr = "/bicharacter/exponents"
        if section == "module":
            base = f"/modules/{module}"
            ptr = base
            if c.subjects:
                side = "right" if c.name.endswith("right") else "left"
                cand = f"{base}/{side}/{c.subjects[0]}"
                if spec.location(cand):
                    ptr = cand
        loc = spec.location(ptr) if ptr else None
        if loc:
            c.location = f"{loc} ({ptr})"
        elif ptr:
            c.location = ptr


def _window(spec: ProblemSpec, args) -> Any:
    if args.degree_window is not None:
        return parse_window(args.degree_window, spec.group)
    return spec.options["degree_window"]


def _opt(spec: ProblemSpec, args, name: str) -> int:
    v = getattr(args, name)
    return spec.options[name] if v is None else v


def _selected(spec: ProblemSpec, args) -> list[str]:
    if args.module:
        for m in args.module:
            if m not in spec.modules:
                raise CommandError(f"no module named {m!r} in the spec")
        return list(args.module)
    return sorted(spec.modules)


def _cells(table: dict) -> list[dict]:
    return [{"n": n, "h": list(h), "dim": d} for (n, h), d in sorted(table.items())]


def _dump(dirpath: str | None, name: str, m: ExactMatrix) -> None:
    if not dirpath:
        return
    os.makedirs(dirpath, exist_ok=True)
    with open(os.path.join(dirpath, name + ".json"), "w", encoding="utf-8") as fh:
        json.dump({"rows": m.rows, "cols": m.cols, "root_order": m.n,
                   "entries": [[format_scalar(v) for v in row] for row in m.to_rows()]}, fh, sort_keys=True)
        fh.write("\n")


def _hname(h) -> str:
    return "_".join(str(x) for x in h) or "e"


def cmd_validate(spec: ProblemSpec, args) -> tuple[bool, dict]:
    reports = []
    bi = validate_bicharacter(spec.bicharacter)
    _locate(spec, bi, "bicharacter")
    reports.append(bi)
    if bi.passed:
        lie = validate_color_lie(spec.lie)
        _locate(spec, lie, "lie")
        reports.append(lie)
    for name in _selected(spec, args):
        M = spec.module(name)
        rep = validate_module(M, spec.lie)
        rep.subject = f"module:{name}"
        _locate(spec, rep, "module", name)
        reports.append(rep)
    ok = all(r.passed for r in reports)
    return ok, {"reports": [r.to_dict() for r in reports]}


def cmd_hopf(spec: ProblemSpec, args) -> tuple[bool, dict]:
    U = spec.enveloping()
    k = _opt(spec, args, "word_len")
    hopf = check_hopf_axioms(U, k)
    conf = U.check_confluence(max(k, 1))
    return hopf.passed and conf.passed, {"reports": [hopf.to_dict(), conf.to_dict()], "word_len": k}


def cmd_koszul(spec: ProblemSpec, args) -> tuple[bool, dict]:
    n_max, p_max, k = _opt(spec, args, "n_max"), _opt(spec, args, "p_max"), _opt(spec, args, "word_len")
    reps = [check_koszul_identities(spec.lie, max(n_max, 1), k), homotopy_check(spec.lie, max(p_max, 1))]
    return all(r.passed for r in reps), {"reports": [r.to_dict() for r in reps], "n_max": n_max,
                                         "p_max": p_max, "pbw_cap": k}


def _lie_module(spec: ProblemSpec, name: str):
    M = spec.module(name)
    if M.is_bimodule:
        return f"ad({name})", adjoint_module(spec.lie, M)
    return name, M


def cmd_lie(spec: ProblemSpec, args) -> tuple[bool, dict]:
    n_max = _opt(spec, args, "n_max")
    win = _window(spec, args)
    out = []
    ok = True
    for name in _selected(spec, args):
        label, M = _lie_module(spec, name)
        table = lie_cohomology_dims(spec.lie, M, n_max, win)
        sq = check_delta_squared(spec.lie, M, n_max, win)
        ok = ok and sq.passed
        out.append({"module": label, "table": _cells(table), "delta_squared_zero": sq.passed})
        if args.dump_matrices:
            for h in ce_window(spec.lie, M, n_max, win):
                for n in range(n_max + 1):
                    _dump(args.dump_matrices, f"ce_{label}_n{n}_h{_hname(h)}", ce_delta(spec.lie, M, n, h))
    return ok, {"results": out, "n_max": n_max}


def _finite_algebra(spec: ProblemSpec):
    try:
        return spec.finite_algebra()
    except ValueError as e:
        raise CommandError(str(e)) from None


def _bimodules(spec: ProblemSpec, args) -> list[str]:
    names = [m for m in _selected(spec, args) if spec.modules[m].bimodule]
    if not names:
        raise CommandError("the spec has no bimodule to compute with")
    return names


def cmd_hochschild(spec: ProblemSpec, args) -> tuple[bool, dict]:
    A = _finite_algebra(spec)
    n_max = _opt(spec, args, "n_max")
    win = _window(spec, args)
    out = []
    for name in _bimodules(spec, args):
        M = spec.module(name)
        out.append({"module": name, "table": _cells(hochschild_dims(A, M, n_max, win))})
        if args.dump_matrices:
            for h in hochschild_window(A, win):
                for n, m in enumerate(bar_differentials(A, M, n_max, h)):
                    _dump(args.dump_matrices, f"bar_{name}_n{n}_h{_hname(h)}", m)
    return True, {"results": out, "n_max": n_max, "algebra_dim": A.dim}


def cmd_compare(spec: ProblemSpec, args) -> tuple[bool, dict]:
    A = _finite_algebra(spec)
    n_max = _opt(spec, args, "n_max")
    win = _window(spec, args)
    out = []
    ok = True
    for name in _bimodules(spec, args):
        rep = compare_theorem5(spec.lie, spec.module(name), n_max, win, A=A)
        ok = ok and rep.all_equal
        out.append({"module": name, **rep.to_dict()})
    return ok, {"results": out, "all_equal": ok, "n_max": n_max}


HANDLERS = {
    "validate": cmd_validate,
    "hopf-check": cmd_hopf,
    "koszul-check": cmd_koszul,
    "lie-cohomology": cmd_lie,
    "hochschild": cmd_hochschild,
    "compare": cmd_compare,
}


def run_command(cmd: str, spec: ProblemSpec, args: argparse.Namespace | None = None) -> tuple[int, dict]:
    """Run one command; returns (exit status, report document)."""
    if cmd not in HANDLERS:
        raise CommandError(f"unknown command {cmd!r}")
    args = args or build_parser().parse_args([cmd, "-"])
    try:
        ok, body = HANDLERS[cmd](spec, args)
    except (CommandError, ValueError, KeyError, TypeError, SpecError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        return 2, {"command": cmd, "spec": spec.name, "error": msg}
    return (0 if ok else 1), {"command": cmd, "spec": spec.name, "passed": ok, **body}


# -- text output --------------------------------------------------------------------------------------


def _table_text(rows: list[dict]) -> list[str]:
    hs = sorted({tuple(r["h"]) for r in rows})
    ns = sorted({r["n"] for r in rows})
    val = {(r["n"], tuple(r["h"])): r for r in rows}
    head = ["n"] + [str(list(h)) for h in hs]
    body = []
    for n in ns:
        line = [str(n)]
        for h in hs:
            r = val.get((n, h))
            if r is None:
                line.append("")
            elif "dim" in r:
                line.append(str(r["dim"]))
            else:
                line.append(f"{r['hochschild']}|{r['lie']}" + ("" if r["equal"] else " !"))
        body.append(line)
    widths = [max(len(x[i]) for x in [head] + body) for i in range(len(head))]
    return ["  ".join(x[i].rjust(widths[i]) for i in range(len(head))) for x in [head] + body]


def format_pretty(doc: dict) -> str:
    lines = [f"{doc['command']} on {doc.get('spec') or '(unnamed)'}"]
    if "error" in doc:
        lines.append(f"error: {doc['error']}")
        return "\n".join(lines) + "\n"
    lines.append("status: " + ("pass" if doc["passed"] else "FAIL"))
    for rep in doc.get("reports", []):
        lines.append(f"[{'pass' if rep['passed'] else 'FAIL'}] {rep['subject']} ({rep['n_checks']} checks)")
        for f in rep["failures"]:
            loc = f" at {f['location']}" if "location" in f else ""
            lines.append(f"    {f['name']}{loc}: {f.get('witness', '')}")
    for res in doc.get("results", []):
        tag = ""
        if "all_equal" in res:
            tag = "  all_equal=" + str(res["all_equal"]).lower()
        lines.append(f"module {res['module']}{tag}")
        rows = res.get("table") or res.get("cells") or []
        lines.extend("  " + ln for ln in _table_text(rows))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colorhom", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", help="problem file (JSON)")
    p.add_argument("--n-max", type=int, dest="n_max")
    p.add_argument("--p-max", type=int, dest="p_max")
    p.add_argument("--word-len", type=int, dest="word_len")
    p.add_argument("--degree-window", dest="degree_window", help="'all' or a JSON list such as [[0],[1]]")
    p.add_argument("--module", action="append", help="restrict to the named module (repeatable)")
    p.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    p.add_argument("--dump-matrices", dest="dump_matrices", metavar="DIR")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
    except (OSError, SpecError) as e:
        doc = {"command": args.command, "spec": args.spec, "error": str(e)}
        sys.stdout.write(format_pretty(doc) if args.pretty else json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return 2
    status, doc = run_command(args.command, spec, args)
    sys.stdout.write(format_pretty(doc) if args.pretty else json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
