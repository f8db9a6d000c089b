"""Color Lie algebras given by structure constants on a homogeneous basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from colorhom.grading import Bicharacter, GroupElement, GroupSpec
from colorhom.reports import ValidationReport
from colorhom.scalars import Scalar, format_scalar

LieElement = dict  # basis index -> Scalar, no zero values


def _fmt_vec(names: Sequence[str], vec: Mapping[int, Scalar]) -> str:
    if not vec:
        return "0"
    return " + ".join(f"({format_scalar(c)})*{names[k]}" for k, c in sorted(vec.items()))


@dataclass(eq=False)
class ColorLieAlgebra:
    """Basis names and G-degrees plus [x_i, x_j] for every ordered pair.

    ``structure`` only stores nonzero brackets; a missing pair means zero.
    """

    eps: Bicharacter
    names: tuple[str, ...]
    degrees: tuple[GroupElement, ...]
    structure: dict[tuple[int, int], dict[int, Scalar]] = field(default_factory=dict)

    def __post_init__(self):
        self.names = tuple(self.names)
        self.degrees = tuple(self.group.element(d) for d in self.degrees)
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate basis names")
        self._index = {nm: i for i, nm in enumerate(self.names)}
        clean = {}
        for (i, j), vec in self.structure.items():
            self._check_index(i)
            self._check_index(j)
            v = {k: Scalar.of(self.n, c) for k, c in vec.items() if c}
            for k in v:
                self._check_index(k)
            if v:
                clean[i, j] = v
        self.structure = clean

    @property
    def group(self) -> GroupSpec:
        return self.eps.group

    @property
    def n(self) -> int:
        return self.eps.root_order

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown basis element {name!r}") from None

    def _check_index(self, i: int) -> None:
        if not 0 <= i < len(self.names):
            raise IndexError(f"basis index {i} out of range")

    def parity(self, i: int) -> int:
        return self.eps.parity(self.degrees[i])

    def bracket_basis(self, i: int, j: int) -> dict[int, Scalar]:
        self._check_index(i)
        self._check_index(j)
        return self.structure.get((i, j), {})

    def element(self, coeffs: Mapping) -> LieElement:
        out = {}
        for key, c in coeffs.items():
            k = self.index(key) if isinstance(key, str) else key
            self._check_index(k)
            c = Scalar.of(self.n, c)
            if c:
                out[k] = c
        return out

    def format(self, vec: Mapping[int, Scalar]) -> str:
        return _fmt_vec(self.names, vec)

    @classmethod
    def from_brackets(cls, eps: Bicharacter, basis: Sequence[tuple[str, Sequence[int]]],
                      brackets: Mapping[tuple[str, str], Mapping[str, object]],
                      complete: bool = True) -> ColorLieAlgebra:
        """Build from named brackets; a pair whose reverse is absent is completed by antisymmetry."""
        names = [b[0] for b in basis]
        idx = {nm: i for i, nm in enumerate(names)}
        degrees = [eps.group.element(b[1]) for b in basis]
        n = eps.root_order
        struct: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (a, b), val in brackets.items():
            struct[idx[a], idx[b]] = {idx[k]: Scalar.of(n, v) if not isinstance(v, Scalar) else v
                                      for k, v in val.items()}
        given = set(struct)
        if complete:
            for (i, j) in list(given):
                if (j, i) not in given and i != j:
                    f = -eps(degrees[j], degrees[i])
                    struct[j, i] = {k: f * c for k, c in struct[i, j].items()}
        return cls(eps, tuple(names), tuple(degrees), struct)


def bracket(L: ColorLieAlgebra, a: Mapping[int, Scalar], b: Mapping[int, Scalar]) -> LieElement:
    out: dict[int, Scalar] = {}
    for i, ca in a.items():
        for j, cb in b.items():
            for k, c in L.bracket_basis(i, j).items():
                v = ca * cb * c
                out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if v}


def _sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        t = out[k] - v if k in out else -v
        if t:
            out[k] = t
        else:
            out.pop(k, None)
    return out


def _scale(c: Scalar, a: Mapping[int, Scalar]) -> dict:
    return {k: c * v for k, v in a.items() if c * v}


def validate_color_lie(L: ColorLieAlgebra) -> ValidationReport:
    """Exhaustive checks over basis pairs and triples: grading, antisymmetry, Jacobi."""
    rep = ValidationReport("color_lie")
    eps, G, deg, names = L.eps, L.group, L.degrees, L.names
    d = L.dim
    basis = [{i: Scalar.one(L.n)} for i in range(d)]

    bad_parity = []
    for i in range(d):
        v = eps(deg[i], deg[i])
        if v * v != 1:
            bad_parity.append(names[i])
    rep.add("parity_is_sign", not bad_parity, f"eps(g,g)^2 != 1 on degrees of {bad_parity}")

    grading_witness = None
    subj: tuple = ()
    for (i, j), vec in sorted(L.structure.items()):
        want = G.compose(deg[i], deg[j])
        for k in vec:
            if deg[k] != want:
                grading_witness = (f"[{names[i]},{names[j]}] has component {names[k]} of degree "
                                   f"{list(deg[k])}, expected {list(want)}")
                subj = (names[i], names[j])
                break
        if grading_witness:
            break
    rep.add("grading", grading_witness is None, grading_witness, subj)

    anti_witness = None
    for i in range(d):
        for j in range(d):
            resid = _sub(L.bracket_basis(i, j), _scale(-eps(deg[i], deg[j]), L.bracket_basis(j, i)))
            if resid:
                anti_witness = (f"[{names[i]},{names[j]}] + eps*[{names[j]},{names[i]}] = "
                                f"{L.format(resid)}")
                subj = (names[i], names[j])
                break
        if anti_witness:
            break
    rep.add("antisymmetry", anti_witness is None, anti_witness, subj)

    even_sq = None
    for i in range(d):
        if eps(deg[i], deg[i]) == 1 and L.bracket_basis(i, i):
            even_sq = f"[{names[i]},{names[i]}] = {L.format(L.bracket_basis(i, i))} for even {names[i]}"
            subj = (names[i], names[i])
            break
    rep.add("even_self_bracket_zero", even_sq is None, even_sq, subj)

    jac_witness = None
    for a in range(d):
        for b in range(d):
            for c in range(d):
                A, B, C = basis[a], basis[b], basis[c]
                t1 = _scale(eps(deg[c], deg[a]), bracket(L, A, bracket(L, B, C)))
                t2 = _scale(eps(deg[a], deg[b]), bracket(L, B, bracket(L, C, A)))
                t3 = _scale(eps(deg[b], deg[c]), bracket(L, C, bracket(L, A, B)))
                resid = _sub(_sub(t1, _scale(Scalar.of(L.n, -1), t2)), _scale(Scalar.of(L.n, -1), t3))
                if resid:
                    jac_witness = f"triple ({names[a]},{names[b]},{names[c]}): residual {L.format(resid)}"
                    subj = (names[a], names[b], names[c])
                    break
            if jac_witness:
                break
        if jac_witness:
            break
    rep.add("jacobi", jac_witness is None, jac_witness, subj)
    rep.info["dim"] = d
    return rep


def abelian_odd(k: int) -> ColorLieAlgebra:
    """k odd generators with zero bracket over the super Z_2 bicharacter."""
    eps = Bicharacter.super_z2()
    names = tuple(f"x{i + 1}" for i in range(k)) if k > 1 else ("x",)
    return ColorLieAlgebra(eps, names, tuple((1,) for _ in range(k)), {})
