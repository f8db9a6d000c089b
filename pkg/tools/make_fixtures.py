"""Regenerate the shipped fixture files and the mutated test fixtures.

    python3 tools/make_fixtures.py
"""

from __future__ import annotations

import copy
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "src" / "colorhom" / "fixtures"
MUTANTS = ROOT / "tests" / "data"

DEFAULT_OPTIONS = {"n_max": 3, "p_max": 3, "word_len": 3, "degree_window": "all"}


def write(path: Path, doc: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def super_problem(name, basis, brackets, modules):
    return {
        "name": name,
        "group": {"orders": [2]},
        "bicharacter": {"root_order": 2, "exponents": [[1]]},
        "lie": {"basis": [{"name": n, "degree": d} for n, d in basis],
                "brackets": [{"left": a, "right": b, "value": v} for (a, b), v in brackets]},
        "modules": modules,
        "options": dict(DEFAULT_OPTIONS),
    }


def abelian_odd(k: int) -> dict:
    names = ["x"] if k == 1 else [f"x{i + 1}" for i in range(k)]
    return super_problem(f"abelian_odd_{k}", [(n, [1]) for n in names], [],
                         {"trivial": {"kind": "trivial"}, "regular": {"kind": "regular"},
                          "adjoint": {"kind": "adjoint"}})


def heis3() -> dict:
    step2 = {"kind": "explicit",
             "basis": [{"name": "v0", "degree": [0]}, {"name": "v1", "degree": [1]}],
             "left": {"x": [["0", "0"], ["1", "0"]]}}
    return super_problem("heis3", [("x", [1]), ("y", [1]), ("z", [0])], [(("x", "y"), {"z": "1"})],
                         {"trivial": {"kind": "trivial"}, "adjoint": {"kind": "adjoint"}, "step2": step2})


def glcolor() -> dict:
    """gl(3) with rows graded by Z2 x Z2 and the commutator AB - eps(|A|,|B|) BA."""
    row = [(0, 0), (1, 0), (0, 1)]
    add = lambda g, h: ((g[0] + h[0]) % 2, (g[1] + h[1]) % 2)
    eps = lambda g, h: (-1) ** (g[0] * h[1] + g[1] * h[0])
    units = [(i, j) for i in range(3) for j in range(3)]
    name = lambda u: f"E{u[0] + 1}{u[1] + 1}"
    deg = {u: add(row[u[0]], row[u[1]]) for u in units}
    brackets = []
    for a in units:
        for b in units:
            val: dict[str, int] = {}
            if a[1] == b[0]:
                k = name((a[0], b[1]))
                val[k] = val.get(k, 0) + 1
            if b[1] == a[0]:
                k = name((b[0], a[1]))
                val[k] = val.get(k, 0) - eps(deg[a], deg[b])
            val = {k: str(v) for k, v in val.items() if v}
            if val:
                brackets.append({"left": name(a), "right": name(b), "value": val})
    natural = {"kind": "explicit",
               "basis": [{"name": f"v{i + 1}", "degree": list(row[i])} for i in range(3)],
               "left": {name(u): [["1" if (r, c) == u else "0" for c in range(3)] for r in range(3)]
                        for u in units}}
    return {
        "name": "glcolor",
        "group": {"orders": [2, 2]},
        "bicharacter": {"root_order": 2, "exponents": [[0, 1], [1, 0]]},
        "lie": {"basis": [{"name": name(u), "degree": list(deg[u])} for u in units],
                "brackets": brackets, "complete": False},
        "modules": {"trivial": {"kind": "trivial"}, "adjoint": {"kind": "adjoint"}, "natural": natural},
        # nine generators make the Koszul and Hopf checks expensive; raise with --n-max / --word-len
        "options": dict(DEFAULT_OPTIONS, n_max=2, word_len=2),
    }


def heis_z3() -> dict:
    """Strictly upper triangular 3x3 matrices graded by Z3 x Z3, with a non-real bicharacter."""
    natural = {"kind": "explicit",
               "basis": [{"name": "v1", "degree": [0, 2]}, {"name": "v2", "degree": [1, 2]},
                         {"name": "v3", "degree": [0, 0]}],
               "left": {"a": [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
                        "b": [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]],
                        "c": [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]]}}
    return {
        "name": "heis_z3",
        "group": {"orders": [3, 3]},
        "bicharacter": {"root_order": 3, "exponents": [[0, 1], [2, 0]]},
        "lie": {"basis": [{"name": "a", "degree": [2, 0]}, {"name": "b", "degree": [1, 2]},
                          {"name": "c", "degree": [0, 2]}],
                "brackets": [{"left": "a", "right": "b", "value": {"c": "1"}}]},
        "modules": {"trivial": {"kind": "trivial"}, "adjoint": {"kind": "adjoint"}, "natural": natural},
        "options": dict(DEFAULT_OPTIONS),
    }


def mutants(h: dict) -> dict[str, dict]:
    out = {}
    # eps(g,h) eps(h,g) = zeta_3^2 on the generator of Z3
    m = copy.deepcopy(h)
    m["name"] = "mutant_antisymmetry_bichar"
    m["group"] = {"orders": [3]}
    m["bicharacter"] = {"root_order": 3, "exponents": [[1]]}
    m["lie"] = {"basis": [{"name": "x", "degree": [1]}], "brackets": []}
    m["modules"] = {}
    out["bichar_antisymmetry"] = m
    # zeta_4 on Z2 does not descend to the quotient
    m = copy.deepcopy(m)
    m["name"] = "mutant_bilinearity"
    m["group"] = {"orders": [2]}
    m["bicharacter"] = {"root_order": 4, "exponents": [[1]]}
    out["bichar_bilinearity"] = m
    # [x, y] = x has degree 1, not |x||y| = 0
    m = copy.deepcopy(h)
    m["name"] = "mutant_grading"
    m["lie"]["brackets"] = [{"left": "x", "right": "y", "value": {"x": "1"}}]
    out["lie_grading"] = m
    # [y, x] = -z contradicts [x, y] = z for two odd elements
    m = copy.deepcopy(h)
    m["name"] = "mutant_antisymmetry"
    m["lie"]["brackets"].append({"left": "y", "right": "x", "value": {"z": "-1"}})
    out["lie_antisymmetry"] = m
    # trivially graded, antisymmetric but not Jacobi
    out["lie_jacobi"] = {
        "name": "mutant_jacobi",
        "group": {"orders": []},
        "bicharacter": {"root_order": 1, "exponents": []},
        "lie": {"basis": [{"name": n, "degree": []} for n in "xyz"],
                "brackets": [{"left": "x", "right": "y", "value": {"z": "1"}},
                             {"left": "y", "right": "z", "value": {"x": "1"}},
                             {"left": "z", "right": "x", "value": {"x": "1"}}]},
        "modules": {},
    }
    # x sends v0 (degree 0) to v1, but v1 is given degree 0 as well
    m = copy.deepcopy(h)
    m["name"] = "mutant_module_grading"
    m["modules"] = {"step2": copy.deepcopy(h["modules"]["step2"])}
    m["modules"]["step2"]["basis"][1]["degree"] = [0]
    out["module_grading"] = m
    return out


def main() -> None:
    fixtures = {"abelian_odd_1": abelian_odd(1), "abelian_odd_2": abelian_odd(2), "heis3": heis3(),
                "glcolor": glcolor(), "heis_z3": heis_z3()}
    for name, doc in fixtures.items():
        write(FIXTURES / f"{name}.json", doc)
    for name, doc in mutants(fixtures["heis3"]).items():
        write(MUTANTS / f"mutant_{name}.json", doc)


if __name__ == "__main__":
    main()
