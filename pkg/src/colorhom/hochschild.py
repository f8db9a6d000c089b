"""Finite-dimensional graded algebras and their graded Hochschild cohomology."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from colorhom.ce_cohomology import lie_cohomology_dims
from colorhom.color_lie import ColorLieAlgebra
from colorhom.enveloping import EnvelopingAlgebra
from colorhom.gmodules import GradedBimodule, adjoint_module, shift, validate_module
from colorhom.grading import GroupElement, GroupSpec
from colorhom.reports import ValidationReport
from colorhom.scalars import ExactMatrix, Scalar, matrix_rank_kernel


@dataclass(eq=False)
class FiniteGradedAlgebra:
    """Basis with degrees, structure constants ``mult[i, j] = {k: c}`` and a unit basis element.

    ``generators`` lists basis indices that generate the algebra and ``words``
    writes every basis element as a product of generators, which is how module
    actions given on generators extend to the whole basis.
    """

    group: GroupSpec
    n: int
    names: tuple[str, ...]
    degrees: tuple[GroupElement, ...]
    mult: dict[tuple[int, int], dict[int, Scalar]]
    unit: int = 0
    generators: tuple[int, ...] = ()
    words: dict[int, tuple[int, ...]] | None = None
    hopf: EnvelopingAlgebra | None = field(default=None, repr=False)
    monomials: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.names = tuple(self.names)
        self.degrees = tuple(self.group.element(d) for d in self.degrees)
        self.generators = tuple(self.generators)
        self.mult = {k: {i: Scalar.of(self.n, c) for i, c in v.items() if c} for k, v in self.mult.items()}
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if not 0 <= self.unit < len(self.names):
            raise ValueError("unit must be a basis index")

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(self.names[g] for g in self.generators)

    def word_names(self, i: int) -> tuple[str, ...]:
        if i == self.unit:
            return ()
        if self.words is None or i not in self.words:
            raise ValueError(f"basis element {self.names[i]} has no generator word")
        return tuple(self.names[g] for g in self.words[i])

    def product(self, i: int, j: int) -> dict[int, Scalar]:
        return self.mult.get((i, j), {})


def _mul_vec(A: FiniteGradedAlgebra, a: Mapping[int, Scalar], b: Mapping[int, Scalar]) -> dict:
    out: dict = {}
    for i, ca in a.items():
        for j, cb in b.items():
            for k, c in A.product(i, j).items():
                v = out[k] + ca * cb * c if k in out else ca * cb * c
                if v:
                    out[k] = v
                else:
                    out.pop(k)
    return out


def validate_algebra(A: FiniteGradedAlgebra) -> ValidationReport:
    rep = ValidationReport("algebra")
    G = A.group
    one = Scalar.one(A.n)
    w = None
    for (i, j), v in A.mult.items():
        for k in v:
            if A.degrees[k] != G.compose(A.degrees[i], A.degrees[j]):
                w = f"{A.names[i]}*{A.names[j]} has component {A.names[k]} of the wrong degree"
    rep.add("grading", w is None, w)
    rep.add("unit_degree", A.degrees[A.unit] == G.identity(), "unit is not of degree e")
    w = None
    for i in range(A.dim):
        e = {i: one}
        if A.product(A.unit, i) != e or A.product(i, A.unit) != e:
            w = f"unit law fails on {A.names[i]}"
            break
    rep.add("unit", w is None, w)
    w = None
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        lhs = _mul_vec(A, A.product(i, j), {k: one})
        rhs = _mul_vec(A, {i: one}, A.product(j, k))
        if lhs != rhs:
            w = f"({A.names[i]}*{A.names[j]})*{A.names[k]} != {A.names[i]}*({A.names[j]}*{A.names[k]})"
            break
    rep.add("associativity", w is None, w)
    if A.words is not None:
        w = None
        for i, word in A.words.items():
            v = {A.unit: one}
            for g in word:
                v = _mul_vec(A, v, {g: one})
            if v != {i: one}:
                w = f"word for {A.names[i]} does not multiply to it"
                break
        rep.add("words", w is None, w)
    return rep


def trivial_algebra(group: GroupSpec | None = None, n: int = 1) -> FiniteGradedAlgebra:
    G = group or GroupSpec(())
    return FiniteGradedAlgebra(G, n, ("1",), (G.identity(),), {(0, 0): {0: 1}}, 0, (), {})


def truncate_enveloping(L: ColorLieAlgebra | EnvelopingAlgebra, cap: int = 256) -> FiniteGradedAlgebra:
    """U(L) as a FiniteGradedAlgebra on its PBW basis, with the Hopf data attached."""
    U = L if isinstance(L, EnvelopingAlgebra) else EnvelopingAlgebra(L)
    L = U.L
    monos: list[tuple[int, ...]] = [()]
    layer: list[tuple[int, ...]] = [()]
    while layer:
        nxt = []
        for m in layer:
            start = m[-1] if m else 0
            for i in range(start, L.dim):
                if m and i == m[-1] and L.parity(i) == -1:
                    continue
                nxt.append(m + (i,))
        monos.extend(nxt)
        layer = nxt
        if len(monos) > cap:
            evens = [L.names[i] for i in range(L.dim) if L.parity(i) == 1]
            raise ValueError(f"U(L) not finite-dimensional at this cap ({cap}); "
                             f"even basis elements {evens} have unbounded powers")
    index = {m: k for k, m in enumerate(monos)}
    mult = {}
    for a, ma in enumerate(monos):
        for b, mb in enumerate(monos):
            prod = U.normal_form(ma + mb).terms
            if prod:
                mult[a, b] = {index[m]: c for m, c in prod.items()}
    names = tuple(U.mono_name(m) for m in monos)
    degrees = tuple(U.degree(m) for m in monos)
    gens = tuple(index[(i,)] for i in range(L.dim))
    words = {k: tuple(index[(i,)] for i in m) for k, m in enumerate(monos) if m}
    return FiniteGradedAlgebra(L.group, L.n, names, degrees, mult, 0, gens, words, U, tuple(monos))


def regular_bimodule(A: FiniteGradedAlgebra) -> GradedBimodule:
    """A as a bimodule over itself, actions given on the generators."""
    left, right = {}, {}
    for g in A.generators:
        ld, rd = {}, {}
        for j in range(A.dim):
            for k, c in A.product(g, j).items():
                ld[k, j] = c
            for k, c in A.product(j, g).items():
                rd[k, j] = c
        left[A.names[g]] = ExactMatrix.from_sparse(A.dim, A.dim, ld, A.n)
        right[A.names[g]] = ExactMatrix.from_sparse(A.dim, A.dim, rd, A.n)
    return GradedBimodule(A.group, A.n, A.names, A.degrees, left, right, over=A)


# -- bar complex -----------------------------------------------------------------------------------


class _BarContext:
    def __init__(self, A: FiniteGradedAlgebra, M: GradedBimodule, normalized: bool):
        self.A, self.M = A, M
        self.letters = [i for i in range(A.dim) if not (normalized and i == A.unit)]
        self.L = [M.act_left(A.word_names(i)) for i in range(A.dim)]
        self.R = [M.act_right(A.word_names(i)) for i in range(A.dim)]
        self._tuples: dict[int, list[tuple[int, ...]]] = {}
        self._tdeg: dict[tuple[int, ...], GroupElement] = {}

    def tuples(self, n: int) -> list[tuple[int, ...]]:
        if n not in self._tuples:
            self._tuples[n] = list(itertools.product(self.letters, repeat=n))
        return self._tuples[n]

    def tdeg(self, t: tuple[int, ...]) -> GroupElement:
        d = self._tdeg.get(t)
        if d is None:
            d = self.A.group.product([self.A.degrees[i] for i in t])
            self._tdeg[t] = d
        return d

    def basis(self, n: int, h: GroupElement) -> list[tuple[tuple[int, ...], int]]:
        G = self.A.group
        out = []
        for t in self.tuples(n):
            want = G.compose(h, self.tdeg(t))
            for j in range(self.M.dim):
                if self.M.degrees[j] == want:
                    out.append((t, j))
        return out


def _bar_matrix(ctx: _BarContext, n: int, h: GroupElement) -> ExactMatrix:
    A, M = ctx.A, ctx.M
    dom = ctx.basis(n, h)
    cod = ctx.basis(n + 1, h)
    col = {k: i for i, k in enumerate(dom)}
    row = {k: i for i, k in enumerate(cod)}
    letters = set(ctx.letters)
    data: dict = {}

    def acc(key, v):
        x = data[key] + v if key in data else v
        if x:
            data[key] = x
        else:
            data.pop(key)

    for s in {t for t, _ in cod}:
        # a_1 f(a_2, ..., a_{n+1})
        La = ctx.L[s[0]]
        Ra = ctx.R[s[-1]]
        for j in range(M.dim):
            c1 = col.get((s[1:], j))
            if c1 is not None:
                for r in range(M.dim):
                    v = La[r, j]
                    if v and (s, r) in row:
                        acc((row[s, r], c1), v)
            c2 = col.get((s[:-1], j))
            if c2 is not None:
                for r in range(M.dim):
                    v = Ra[r, j]
                    if v and (s, r) in row:
                        acc((row[s, r], c2), v if (n + 1) % 2 == 0 else -v)
            if (s, j) not in row:
                continue
            rj = row[s, j]
            for i in range(n):
                sgn = -1 if i % 2 == 0 else 1  # (-1)^(i+1) with 1-based index i+1
                for k, c in A.product(s[i], s[i + 1]).items():
                    if k not in letters:
                        continue
                    ci = col.get((s[:i] + (k,) + s[i + 2:], j))
                    if ci is not None:
                        acc((rj, ci), c if sgn > 0 else -c)
    return ExactMatrix.from_sparse(len(cod), len(dom), data, A.n)


def hochschild_window(A: FiniteGradedAlgebra, degree_window="all") -> list[GroupElement]:
    G = A.group
    if degree_window != "all":
        return [G.element(h) for h in degree_window]
    if not G.is_finite:
        raise ValueError("an explicit degree window is required for an infinite grading group")
    return list(G.elements())


def bar_differentials(A: FiniteGradedAlgebra, M: GradedBimodule, n_max: int, h: GroupElement,
                      normalized: bool = True) -> list[ExactMatrix]:
    ctx = _BarContext(A, M, normalized)
    return [_bar_matrix(ctx, n, A.group.element(h)) for n in range(n_max + 1)]


def hochschild_dims(A: FiniteGradedAlgebra, M: GradedBimodule, n_max: int, degree_window="all",
                    normalized: bool = True) -> dict[tuple[int, GroupElement], int]:
    """dim HH^n(A, M)_h = dim HH^n_gr(A, M[h]) from the (normalized) bar cochains."""
    ctx = _BarContext(A, M, normalized)
    out = {}
    for h in hochschild_window(A, degree_window):
        prev_rank = 0
        for n in range(n_max + 1):
            rank, kernel = matrix_rank_kernel(_bar_matrix(ctx, n, h))
            out[n, h] = kernel - prev_rank
            prev_rank = rank
    return out


def check_bar_squared(A: FiniteGradedAlgebra, M: GradedBimodule, n_max: int, degree_window="all",
                      normalized: bool = True) -> ValidationReport:
    rep = ValidationReport("bar_squared")
    ctx = _BarContext(A, M, normalized)
    witness = None
    for h in hochschild_window(A, degree_window):
        mats = [_bar_matrix(ctx, n, h) for n in range(n_max + 1)]
        for n in range(n_max):
            if not (mats[n + 1] @ mats[n]).is_zero() and witness is None:
                witness = f"b^{n + 1} b^{n} != 0 in degree {list(h)}"
    rep.add("b_squared", witness is None, witness)
    return rep


def centralizer_dim(A: FiniteGradedAlgebra, M: GradedBimodule, h: GroupElement) -> int:
    """dim {m in M of degree h : a.m = m.a for every generator a}, solved directly."""
    G = A.group
    idx = [j for j in range(M.dim) if M.degrees[j] == G.element(h)]
    if not idx:
        return 0
    rows = []
    for g in A.generator_names:
        D = M.left[g] - M.right[g]
        for r in range(M.dim):
            rows.append([D[r, j] for j in idx])
    if not rows:
        return len(idx)
    rank, kernel = matrix_rank_kernel(ExactMatrix.from_rows(rows, M.n))
    return kernel


# -- Hochschild vs Lie comparison ----------------------------------------------------------------------------


@dataclass
class ComparisonReport:
    cells: dict[tuple[int, GroupElement], tuple[int, int]]
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def all_equal(self) -> bool:
        return all(a == b for a, b in self.cells.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "all_equal": self.all_equal,
            "cells": [{"n": n, "h": list(h), "hochschild": a, "lie": b, "equal": a == b}
                      for (n, h), (a, b) in sorted(self.cells.items())],
            "info": self.info,
        }


def compare_theorem5(L: ColorLieAlgebra, M: GradedBimodule, n_max: int, degree_window="all",
                     A: FiniteGradedAlgebra | None = None) -> ComparisonReport:
    """HH^n(U(L), M)_h against H^n_gr(L, ad(M[h])), shifting before taking the adjoint."""
    A = A or truncate_enveloping(L)
    rep = validate_module(M, A)
    if not rep.passed:
        raise ValueError(f"bimodule fails validation: {rep.failures()[0].witness}")
    lhs = hochschild_dims(A, M, n_max, degree_window)
    cells = {}
    G = L.group
    for h in hochschild_window(A, degree_window):
        ad = adjoint_module(L, shift(M, h))
        rhs = lie_cohomology_dims(L, ad, n_max, [G.identity()])
        for n in range(n_max + 1):
            cells[n, h] = (lhs[n, h], rhs[n, G.identity()])
    return ComparisonReport(cells, {"algebra_dim": A.dim, "module_dim": M.dim, "n_max": n_max})
