"""JSON problem files: strict parsing with positioned diagnostics, and serialization.

Layout::

    {"name": ..., "group": {"orders": [...]},
     "bicharacter": {"root_order": N, "exponents": [[...]]},
     "lie": {"basis": [{"name", "degree"}], "brackets": [{"left", "right", "value": {name: scalar}}],
             "complete": true},
     "modules": {name: {"kind": "trivial"|"adjoint"|"regular"|"explicit", ...}},
     "options": {"n_max", "p_max", "word_len", "degree_window"}}

Scalars are strings in the literal syntax of :func:`colorhom.scalars.parse_scalar`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from json_source_map import calculate

from colorhom.color_lie import ColorLieAlgebra
from colorhom.gmodules import GradedBimodule, GradedModule, adjoint_representation, trivial_module
from colorhom.grading import Bicharacter, GroupSpec
from colorhom.scalars import ExactMatrix, Scalar, format_scalar, parse_scalar

MODULE_KINDS = ("trivial", "adjoint", "regular", "explicit")
DEFAULT_OPTIONS = {"n_max": 3, "p_max": 3, "word_len": 3, "degree_window": "all"}


class SpecError(ValueError):
    def __init__(self, message: str, pointer: str = "", line: int | None = None, column: int | None = None):
        self.pointer, self.line, self.column = pointer, line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{where}{message}" + (f" (at {pointer})" if pointer else ""))


@dataclass
class ModuleSpec:
    kind: str
    bimodule: bool = True
    module: GradedModule | None = None  # only for kind == "explicit"


@dataclass(eq=False)
class ProblemSpec:
    name: str
    group: GroupSpec
    bicharacter: Bicharacter
    lie: ColorLieAlgebra
    modules: dict[str, ModuleSpec] = field(default_factory=dict)
    options: dict[str, Any] = field(default_factory=lambda: dict(DEFAULT_OPTIONS))
    positions: dict[str, tuple[int, int]] = field(default_factory=dict, repr=False)
    _built: dict = field(default_factory=dict, repr=False)

    def location(self, pointer: str) -> str | None:
        pos = self.positions.get(pointer)
        return f"{pos[0]}:{pos[1]}" if pos else None

    def bracket_pointer(self, a: str, b: str) -> str | None:
        for key in (("bracket", a, b), ("bracket", b, a)):
            p = self.positions.get(key)  # type: ignore[arg-type]
            if p is not None:
                return p  # type: ignore[return-value]
        return None

    def enveloping(self):
        if "U" not in self._built:
            from colorhom.enveloping import EnvelopingAlgebra
            self._built["U"] = EnvelopingAlgebra(self.lie)
        return self._built["U"]

    def finite_algebra(self):
        if "A" not in self._built:
            from colorhom.hochschild import truncate_enveloping
            self._built["A"] = truncate_enveloping(self.enveloping())
        return self._built["A"]

    def module(self, name: str) -> GradedModule:
        if name not in self.modules:
            raise KeyError(f"no module named {name!r}")
        key = ("module", name)
        if key not in self._built:
            ms = self.modules[name]
            if ms.kind == "trivial":
                M = trivial_module(self.lie, bimodule=ms.bimodule)
            elif ms.kind == "adjoint":
                M = adjoint_representation(self.lie)
            elif ms.kind == "regular":
                from colorhom.hochschild import regular_bimodule
                M = regular_bimodule(self.finite_algebra())
            else:
                M = ms.module
            self._built[key] = M
        return self._built[key]

    def to_dict(self) -> dict[str, Any]:
        return serialize_spec(self)


# -- parsing --------------------------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        try:
            self.doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError(f"syntax error: {e.msg}", "", e.lineno, e.colno) from None
        try:
            self.smap = calculate(text)
        except Exception:  # the map is for diagnostics only
            self.smap = {}
        self.positions: dict = {}

    def pos(self, pointer: str, key: bool = False) -> tuple[int, int] | None:
        e = self.smap.get(pointer)
        if e is None:
            return None
        loc = e.key_start if key and e.key_start is not None else e.value_start
        return loc.line + 1, loc.column + 1

    def fail(self, msg: str, pointer: str, key: bool = False):
        p = self.pos(pointer, key)
        raise SpecError(msg, pointer, *(p if p else (None, None)))

    def obj(self, value, pointer: str, allowed: set[str], required: set[str] = frozenset(),
            what: str = "key") -> dict:
        if not isinstance(value, dict):
            self.fail("expected an object", pointer)
        for k in value:
            if k not in allowed:
                self.fail(f"unknown {what} {k!r}", f"{pointer}/{_esc(k)}", key=True)
        for k in sorted(required):
            if k not in value:
                self.fail(f"missing key {k!r}", pointer)
        return value

    def int_(self, value, pointer: str, minimum: int | None = None) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail("expected an integer", pointer)
        if minimum is not None and value < minimum:
            self.fail(f"expected an integer >= {minimum}", pointer)
        return value

    def int_list(self, value, pointer: str, length: int | None = None) -> list[int]:
        if not isinstance(value, list):
            self.fail("expected an array of integers", pointer)
        out = [self.int_(v, f"{pointer}/{i}") for i, v in enumerate(value)]
        if length is not None and len(out) != length:
            self.fail(f"expected {length} entries, got {len(out)}", pointer)
        return out

    def str_(self, value, pointer: str) -> str:
        if not isinstance(value, str):
            self.fail("expected a string", pointer)
        return value

    def scalar(self, value, pointer: str, n: int) -> Scalar:
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            self.fail("scalar must be a string literal", pointer)
        try:
            return parse_scalar(str(value), n)
        except (ValueError, ZeroDivisionError) as e:
            self.fail(f"malformed scalar {value!r}: {e}", pointer)

    def record(self, key, pointer: str) -> None:
        p = self.pos(pointer)
        if p:
            self.positions[pointer] = p
            if key is not None:
                self.positions[key] = pointer

    def parse(self) -> ProblemSpec:
        top = self.obj(self.doc, "", {"name", "group", "bicharacter", "lie", "modules", "options"},
                       {"group", "bicharacter", "lie"})
        name = self.str_(top.get("name", ""), "/name")

        g = self.obj(top["group"], "/group", {"orders"}, {"orders"})
        orders = self.int_list(g["orders"], "/group/orders")
        for i, m in enumerate(orders):
            self.int_(m, f"/group/orders/{i}", 0)
        group = GroupSpec(tuple(orders))
        r = group.rank

        b = self.obj(top["bicharacter"], "/bicharacter", {"root_order", "exponents"}, {"root_order", "exponents"})
        N = self.int_(b["root_order"], "/bicharacter/root_order", 1)
        exps = b["exponents"]
        if not isinstance(exps, list) or len(exps) != r:
            self.fail(f"exponents must be a {r}x{r} array", "/bicharacter/exponents")
        rows = tuple(tuple(self.int_list(row, f"/bicharacter/exponents/{i}", r)) for i, row in enumerate(exps))
        chi = Bicharacter(group, N, rows)
        self.record(None, "/bicharacter")
        self.record(None, "/bicharacter/exponents")

        lie = self.obj(top["lie"], "/lie", {"basis", "brackets", "complete"}, {"basis"})
        basis_raw = lie["basis"]
        if not isinstance(basis_raw, list):
            self.fail("expected an array", "/lie/basis")
        basis = []
        seen: set[str] = set()
        for i, ent in enumerate(basis_raw):
            p = f"/lie/basis/{i}"
            ent = self.obj(ent, p, {"name", "degree"}, {"name", "degree"})
            nm = self.str_(ent["name"], p + "/name")
            if nm in seen:
                self.fail(f"duplicate basis name {nm!r}", p + "/name")
            seen.add(nm)
            basis.append((nm, tuple(self.int_list(ent["degree"], p + "/degree", r))))
            self.record(("basis", nm), p)
        complete = lie.get("complete", True)
        if not isinstance(complete, bool):
            self.fail("expected true or false", "/lie/complete")
        brackets: dict = {}
        raw_br = lie.get("brackets", [])
        if not isinstance(raw_br, list):
            self.fail("expected an array", "/lie/brackets")
        self.record(None, "/lie/brackets")
        for i, ent in enumerate(raw_br):
            p = f"/lie/brackets/{i}"
            ent = self.obj(ent, p, {"left", "right", "value"}, {"left", "right", "value"})
            a = self.str_(ent["left"], p + "/left")
            bb = self.str_(ent["right"], p + "/right")
            for nm, q in ((a, p + "/left"), (bb, p + "/right")):
                if nm not in seen:
                    self.fail(f"unknown basis name {nm!r}", q)
            if (a, bb) in brackets:
                self.fail(f"bracket [{a},{bb}] given twice", p)
            val = self.obj(ent["value"], p + "/value", seen, what="basis name")
            brackets[a, bb] = {k: self.scalar(v, f"{p}/value/{_esc(k)}", N) for k, v in val.items()}
            self.record(("bracket", a, bb), p)
        L = ColorLieAlgebra.from_brackets(chi, basis, brackets, complete=complete)

        modules: dict[str, ModuleSpec] = {}
        raw_mods = self.obj(top.get("modules", {}), "/modules", set(top.get("modules", {}) or {}))
        for mname, ent in raw_mods.items():
            p = f"/modules/{_esc(mname)}"
            modules[mname] = self.module(ent, p, L)
            self.record(("module", mname), p)

        opts = dict(DEFAULT_OPTIONS)
        raw_opts = self.obj(top.get("options", {}), "/options", set(DEFAULT_OPTIONS))
        for k, v in raw_opts.items():
            if k == "degree_window":
                opts[k] = parse_window(v, group, lambda msg: self.fail(msg, "/options/degree_window"))
            else:
                opts[k] = self.int_(v, f"/options/{k}", 0)
        spec = ProblemSpec(name, group, chi, L, modules, opts)
        spec.positions = self.positions
        return spec

    def module(self, ent, p: str, L: ColorLieAlgebra) -> ModuleSpec:
        if not isinstance(ent, dict) or "kind" not in ent:
            self.fail("module entry needs a 'kind'", p)
        kind = ent["kind"]
        if kind not in MODULE_KINDS:
            self.fail(f"unknown module kind {kind!r}; expected one of {list(MODULE_KINDS)}", p + "/kind")
        if kind in ("adjoint", "regular"):
            self.obj(ent, p, {"kind"})
            return ModuleSpec(kind, kind == "regular")
        if kind == "trivial":
            ent = self.obj(ent, p, {"kind", "bimodule"})
            bim = ent.get("bimodule", True)
            if not isinstance(bim, bool):
                self.fail("expected true or false", p + "/bimodule")
            return ModuleSpec(kind, bim)
        ent = self.obj(ent, p, {"kind", "basis", "left", "right"}, {"basis", "left"})
        G, N = L.group, L.n
        if not isinstance(ent["basis"], list):
            self.fail("expected an array", p + "/basis")
        names, degs = [], []
        for i, b in enumerate(ent["basis"]):
            q = f"{p}/basis/{i}"
            b = self.obj(b, q, {"name", "degree"}, {"name", "degree"})
            names.append(self.str_(b["name"], q + "/name"))
            degs.append(tuple(self.int_list(b["degree"], q + "/degree", G.rank)))
        d = len(names)

        def mats(key: str) -> dict[str, ExactMatrix]:
            raw = self.obj(ent[key], f"{p}/{key}", set(L.names), what="generator")
            out = {}
            for g, rows in raw.items():
                q = f"{p}/{key}/{_esc(g)}"
                if not isinstance(rows, list) or len(rows) != d:
                    self.fail(f"matrix for {g!r} must have {d} rows", q)
                vals = []
                for i, row in enumerate(rows):
                    if not isinstance(row, list) or len(row) != d:
                        self.fail(f"row must have {d} entries", f"{q}/{i}")
                    vals.append([self.scalar(v, f"{q}/{i}/{j}", N) for j, v in enumerate(row)])
                out[g] = ExactMatrix.from_rows(vals, N) if d else ExactMatrix.zeros(0, 0, N)
                self.record(None, q)
            zero = ExactMatrix.zeros(d, d, N)
            for g in L.names:
                out.setdefault(g, zero)
            return out

        left = mats("left")
        if "right" in ent:
            right = mats("right")
            M: GradedModule = GradedBimodule(G, N, tuple(names), tuple(degs), left, right, over=L)
        else:
            M = GradedModule(G, N, tuple(names), tuple(degs), left, over=L)
        return ModuleSpec("explicit", M.is_bimodule, M)


def _esc(key: str) -> str:
    return key.replace("~", "~0").replace("/", "~1")


def parse_window(value, group: GroupSpec, fail=None):
    """'all' or a list of group elements."""
    def bad(msg):
        if fail:
            fail(msg)
        raise SpecError(msg)

    if value == "all":
        return "all"
    if isinstance(value, str):
        try:
            value = json.loads(value)
        except json.JSONDecodeError:
            bad("degree window must be 'all' or a JSON list of group elements")
    if not isinstance(value, list) or not all(
            isinstance(h, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in h) for h in value):
        bad("degree window must be 'all' or a list of integer arrays")
    try:
        return [group.element(h) for h in value]
    except ValueError as e:
        bad(str(e))


def parse_spec(text: str) -> ProblemSpec:
    return _Parser(text).parse()


def load_spec(path) -> ProblemSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


# -- serialization ------------------------------------------------------------------------------------------


def _mat(m: ExactMatrix) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in m.to_rows()]


def serialize_spec(spec: ProblemSpec) -> dict[str, Any]:
    L = spec.lie
    brackets = []
    for (i, j), vec in sorted(L.structure.items()):
        brackets.append({"left": L.names[i], "right": L.names[j],
                         "value": {L.names[k]: format_scalar(c) for k, c in sorted(vec.items())}})
    mods: dict[str, Any] = {}
    for name, ms in spec.modules.items():
        if ms.kind == "trivial":
            mods[name] = {"kind": "trivial", "bimodule": ms.bimodule}
        elif ms.kind in ("adjoint", "regular"):
            mods[name] = {"kind": ms.kind}
        else:
            M = ms.module
            ent: dict[str, Any] = {"kind": "explicit",
                                   "basis": [{"name": nm, "degree": list(d)} for nm, d in zip(M.names, M.degrees)],
                                   "left": {g: _mat(M.left[g]) for g in L.names if g in M.left}}
            if M.is_bimodule:
                ent["right"] = {g: _mat(M.right[g]) for g in L.names if g in M.right}
            mods[name] = ent
    opts = dict(spec.options)
    if opts.get("degree_window") != "all":
        opts["degree_window"] = [list(h) for h in opts["degree_window"]]
    return {
        "name": spec.name,
        "group": {"orders": list(spec.group.orders)},
        "bicharacter": {"root_order": spec.bicharacter.root_order,
                        "exponents": [list(r) for r in spec.bicharacter.exponents]},
        # every ordered pair is written out, so no completion on reload
        "lie": {"basis": [{"name": nm, "degree": list(d)} for nm, d in zip(L.names, L.degrees)],
                "brackets": brackets, "complete": False},
        "modules": mods,
        "options": opts,
    }


def dump_spec(spec: ProblemSpec) -> str:
    return json.dumps(serialize_spec(spec), indent=2, sort_keys=True) + "\n"
