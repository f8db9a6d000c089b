"""Finite-dimensional graded modules and bimodules.

Actions are stored as one :class:`ExactMatrix` per algebra generator, acting on
column vectors: ``left[x][i, j]`` is the coefficient of basis vector i in
``x . m_j`` and ``right[x][i, j]`` the coefficient of m_i in ``m_j . x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from colorhom.color_lie import ColorLieAlgebra
from colorhom.enveloping import EnvelopingAlgebra, TensorUElement, UElement
from colorhom.grading import Bicharacter, GroupElement, GroupSpec
from colorhom.reports import ValidationReport
from colorhom.scalars import ExactMatrix, Scalar, matrix_rank_kernel


@dataclass(eq=False)
class GradedModule:
    group: GroupSpec
    n: int
    names: tuple[str, ...]
    degrees: tuple[GroupElement, ...]
    left: dict[str, ExactMatrix] = field(default_factory=dict)
    over: object = field(default=None, kw_only=True)

    def __post_init__(self):
        self.names = tuple(self.names)
        self.degrees = tuple(self.group.element(d) for d in self.degrees)
        if len(self.names) != len(self.degrees):
            raise ValueError("module names and degrees differ in length")
        d = len(self.names)
        for key, m in self._all_actions():
            if (m.rows, m.cols) != (d, d):
                raise ValueError(f"action matrix for {key!r} is {m.rows}x{m.cols}, module has dimension {d}")
            if m.n != self.n:
                raise ValueError(f"action matrix for {key!r} has root order {m.n}, expected {self.n}")

    def _all_actions(self):
        return list(self.left.items())

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def is_bimodule(self) -> bool:
        return False

    def identity(self) -> ExactMatrix:
        return ExactMatrix.identity(self.dim, self.n)

    def act_left(self, word: Sequence[str]) -> ExactMatrix:
        out = self.identity()
        for g in reversed(list(word)):
            out = self.left[g] @ out
        return out

    def support(self) -> set[GroupElement]:
        return set(self.degrees)

    def basis(self) -> list[tuple[str, GroupElement]]:
        return list(zip(self.names, self.degrees))

    def equals(self, other: GradedModule) -> bool:
        return (self.degrees == other.degrees and self.left == other.left
                and self.is_bimodule == other.is_bimodule
                and (not self.is_bimodule or self.right == other.right))


@dataclass(eq=False)
class GradedBimodule(GradedModule):
    right: dict[str, ExactMatrix] = field(default_factory=dict)

    def _all_actions(self):
        return list(self.left.items()) + [(f"right:{k}", v) for k, v in self.right.items()]

    @property
    def is_bimodule(self) -> bool:
        return True

    def act_right(self, word: Sequence[str]) -> ExactMatrix:
        # m.(a b) = (m.a).b
        out = self.identity()
        for g in word:
            out = self.right[g] @ out
        return out

    def left_module(self) -> GradedModule:
        return GradedModule(self.group, self.n, self.names, self.degrees, dict(self.left), over=self.over)


def _lie_or_algebra(algebra):
    if algebra is None:
        raise ValueError("module has no algebra attached; pass one explicitly")
    return algebra.L if isinstance(algebra, EnvelopingAlgebra) else algebra


def _generator_names(algebra) -> tuple[str, ...]:
    algebra = _lie_or_algebra(algebra)
    return tuple(algebra.generator_names) if hasattr(algebra, "generator_names") else tuple(algebra.names)


def trivial_module(algebra, bimodule: bool = True) -> GradedModule:
    """The one-dimensional module K in degree e on which every generator acts by zero."""
    over = algebra
    algebra = _lie_or_algebra(algebra)
    G = algebra.group
    n = algebra.n
    zero = ExactMatrix.zeros(1, 1, n)
    gens = _generator_names(algebra)
    if bimodule:
        return GradedBimodule(G, n, ("1",), (G.identity(),), {g: zero for g in gens}, {g: zero for g in gens},
                              over=over)
    return GradedModule(G, n, ("1",), (G.identity(),), {g: zero for g in gens}, over=over)


def adjoint_representation(L: ColorLieAlgebra) -> GradedModule:
    """L acting on itself by x . m = [x, m]."""
    left = {}
    for i, x in enumerate(L.names):
        data = {}
        for j in range(L.dim):
            for k, c in L.bracket_basis(i, j).items():
                data[k, j] = c
        left[x] = ExactMatrix.from_sparse(L.dim, L.dim, data, L.n)
    return GradedModule(L.group, L.n, L.names, L.degrees, left, over=L)


# -- validation -------------------------------------------------------------------


def _grading_witness(M: GradedModule, mats: Mapping[str, ExactMatrix], degs: Mapping[str, GroupElement],
                     side: str) -> tuple[str | None, tuple]:
    G = M.group
    for g, m in mats.items():
        for i in range(m.rows):
            for j in range(m.cols):
                if m[i, j] and M.degrees[i] != G.compose(degs[g], M.degrees[j]):
                    return (f"{side} action of {g} sends {M.names[j]} (degree {list(M.degrees[j])}) "
                            f"to {M.names[i]} (degree {list(M.degrees[i])})"), (g,)
    return None, ()


def validate_module(M: GradedModule, algebra=None) -> ValidationReport:
    """Degree compatibility and defining relations of the action(s), exhaustive over generator pairs."""
    algebra = _lie_or_algebra(algebra if algebra is not None else M.over)
    rep = ValidationReport("bimodule" if M.is_bimodule else "module")
    gens = _generator_names(algebra)
    missing = [g for g in gens if g not in M.left] + (
        [f"right:{g}" for g in gens if g not in M.right] if M.is_bimodule else [])
    extra = [g for g in M.left if g not in gens]
    rep.add("generators", not missing and not extra, f"missing actions {missing}, unknown {extra}")
    if missing or extra:
        return rep

    if isinstance(algebra, ColorLieAlgebra):
        degs = dict(zip(algebra.names, algebra.degrees))
    else:
        degs = {g: algebra.degrees[algebra.generators[k]] for k, g in enumerate(gens)}
    w, subj = _grading_witness(M, M.left, degs, "left")
    rep.add("grading", w is None, w, subj)
    if M.is_bimodule:
        w, subj = _grading_witness(M, M.right, degs, "right")
        rep.add("grading_right", w is None, w, subj)

    if isinstance(algebra, ColorLieAlgebra):
        _check_lie_relations(M, algebra, rep)
    else:
        _check_algebra_relations(M, algebra, rep)

    if M.is_bimodule:
        w = None
        for a in gens:
            for b in gens:
                if M.left[a] @ M.right[b] != M.right[b] @ M.left[a]:
                    w = f"(x.m).y != x.(m.y) for x={a}, y={b}"
                    break
            if w:
                break
        rep.add("left_right_commute", w is None, w)
    return rep


def _lin(L: ColorLieAlgebra, mats: Mapping[str, ExactMatrix], vec: Mapping[int, Scalar], size: int, n: int) -> ExactMatrix:
    out = ExactMatrix.zeros(size, size, n)
    for k, c in vec.items():
        out = out + mats[L.names[k]].scale(c)
    return out


def _check_lie_relations(M: GradedModule, L: ColorLieAlgebra, rep: ValidationReport) -> None:
    eps = L.eps
    w = wr = None
    for i, a in enumerate(L.names):
        for j, b in enumerate(L.names):
            e = eps(L.degrees[i], L.degrees[j])
            br = L.bracket_basis(i, j)
            if w is None:
                lhs = M.left[a] @ M.left[b] - (M.left[b] @ M.left[a]).scale(e)
                if lhs != _lin(L, M.left, br, M.dim, M.n):
                    w = f"rho({a})rho({b}) - eps*rho({b})rho({a}) != rho([{a},{b}])"
            if M.is_bimodule and wr is None:
                # m.(ab - eps ba) = m.[a,b]  ->  R(b)R(a) - eps R(a)R(b) = R([a,b])
                lhs = M.right[b] @ M.right[a] - (M.right[a] @ M.right[b]).scale(e)
                if lhs != _lin(L, M.right, br, M.dim, M.n):
                    wr = f"m.({a}{b}) - eps*m.({b}{a}) != m.[{a},{b}]"
    rep.add("bracket_compatibility", w is None, w)
    if M.is_bimodule:
        rep.add("bracket_compatibility_right", wr is None, wr)


def _check_algebra_relations(M: GradedModule, A, rep: ValidationReport) -> None:
    acts = [M.act_left(A.word_names(i)) for i in range(A.dim)]
    racts = [M.act_right(A.word_names(i)) for i in range(A.dim)] if M.is_bimodule else None
    w = wr = None
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.mult.get((i, j), {})
            target = ExactMatrix.zeros(M.dim, M.dim, M.n)
            rtarget = ExactMatrix.zeros(M.dim, M.dim, M.n)
            for k, c in prod.items():
                target = target + acts[k].scale(c)
                if racts:
                    rtarget = rtarget + racts[k].scale(c)
            if w is None and acts[i] @ acts[j] != target:
                w = f"rho({A.names[i]})rho({A.names[j]}) != rho({A.names[i]}*{A.names[j]})"
            if racts and wr is None and racts[j] @ racts[i] != rtarget:
                wr = f"(m.{A.names[i]}).{A.names[j]} != m.({A.names[i]}*{A.names[j]})"
    rep.add("associativity_of_action", w is None, w)
    if racts:
        rep.add("associativity_of_right_action", wr is None, wr)


# -- shift and Hom ----------------------------------------------------------------


def shift(M: GradedModule, h: GroupElement) -> GradedModule:
    """(M[h])_g = M_{hg}: a vector of old degree d gets degree h^-1 d."""
    G = M.group
    hinv = G.inverse(G.element(h))
    degs = tuple(G.compose(hinv, d) for d in M.degrees)
    if M.is_bimodule:
        return GradedBimodule(G, M.n, M.names, degs, dict(M.left), dict(M.right), over=M.over)
    return GradedModule(G, M.n, M.names, degs, dict(M.left), over=M.over)


def _hom_system(M: GradedModule, N: GradedModule, gens: Sequence[str], h: GroupElement,
                include_right: bool) -> tuple[int, int]:
    """(number of unknowns, rank of intertwining equations) for degree-h maps M -> N."""
    G = M.group
    unknowns = {}
    for a in range(N.dim):
        for b in range(M.dim):
            if N.degrees[a] == G.compose(M.degrees[b], h):
                unknowns[a, b] = len(unknowns)
    if not unknowns:
        return 0, 0
    rows: list[dict[int, Scalar]] = []
    pairs = [(N.left[g], M.left[g]) for g in gens]
    if include_right:
        pairs += [(N.right[g], M.right[g]) for g in gens]
    for NA, MA in pairs:
        # (NA f - f MA)[a, b]
        for a in range(N.dim):
            for b in range(M.dim):
                row: dict[int, Scalar] = {}
                for c in range(N.dim):
                    v = NA[a, c]
                    if v and (c, b) in unknowns:
                        k = unknowns[c, b]
                        row[k] = row.get(k, Scalar.zero(M.n)) + v
                for c in range(M.dim):
                    v = MA[c, b]
                    if v and (a, c) in unknowns:
                        k = unknowns[a, c]
                        row[k] = row.get(k, Scalar.zero(M.n)) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    mat = ExactMatrix.from_sparse(len(rows), len(unknowns),
                                  {(i, k): v for i, r in enumerate(rows) for k, v in r.items()}, M.n)
    rank, _ = matrix_rank_kernel(mat)
    return len(unknowns), rank


def degree_window(M: GradedModule, N: GradedModule, window="all") -> list[GroupElement]:
    G = M.group
    if window != "all":
        return [G.element(h) for h in window]
    if G.is_finite:
        return list(G.elements())
    return sorted({G.compose(G.inverse(a), b) for a in M.degrees for b in N.degrees})


def hom_dims(algebra, M: GradedModule, N: GradedModule, window="all",
             bimodule_maps: bool = False) -> dict[GroupElement, int]:
    """dim HOM_A(M, N)_h: maps with f(M_g) in N_{gh} commuting with every generator."""
    gens = _generator_names(algebra)
    out = {}
    for h in degree_window(M, N, window):
        unknowns, rank = _hom_system(M, N, gens, h, bimodule_maps)
        out[h] = unknowns - rank
    return out


def hom_gr_dim(algebra, M: GradedModule, N: GradedModule, bimodule_maps: bool = False) -> int:
    """dim Hom_{A-gr}(M, N), degree-preserving maps only."""
    unknowns, rank = _hom_system(M, N, _generator_names(algebra), M.group.identity(), bimodule_maps)
    return unknowns - rank


# -- adjoint module -----------------------------------------------------------------


def adjoint_module(algebra, M: GradedBimodule) -> GradedModule:
    """x m = x.m - eps(|x|, |m|) m.x on generators."""
    L = _lie_or_algebra(algebra)
    if not M.is_bimodule:
        raise TypeError("adjoint_module needs a bimodule")
    left = {}
    for i, x in enumerate(L.names):
        dx = L.degrees[i]
        col_sign = [L.eps(dx, d) for d in M.degrees]
        R = M.right[x]
        data = {}
        for r in range(M.dim):
            for c in range(M.dim):
                v = M.left[x][r, c] - col_sign[c] * R[r, c]
                if v:
                    data[r, c] = v
        left[x] = ExactMatrix.from_sparse(M.dim, M.dim, data, M.n)
    return GradedModule(M.group, M.n, M.names, M.degrees, left, over=L)


def _left_of(U: EnvelopingAlgebra, M: GradedModule, a: UElement) -> ExactMatrix:
    out = ExactMatrix.zeros(M.dim, M.dim, M.n)
    for m, c in a.terms.items():
        out = out + M.act_left([U.L.names[i] for i in m]).scale(c)
    return out


def _right_of(U: EnvelopingAlgebra, M: GradedBimodule, a: UElement) -> ExactMatrix:
    out = ExactMatrix.zeros(M.dim, M.dim, M.n)
    for m, c in a.terms.items():
        out = out + M.act_right([U.L.names[i] for i in m]).scale(c)
    return out


def adjoint_action_hopf(U: EnvelopingAlgebra, M: GradedBimodule, a: UElement) -> ExactMatrix:
    """Matrix of a m = sum chi(|a_2|, |m|) a_1 . m . S(a_2) for any a in U(L)."""
    chi = U.eps
    D = U.coproduct(a)
    data: dict = {}
    cols = {}
    for (p, q), c in D.terms.items():
        Lp = _left_of(U, M, U.basis_element(p))
        Rq = _right_of(U, M, U.antipode(U.basis_element(q)))
        prod = Lp @ Rq
        dq = U.degree(q)
        for j in range(M.dim):
            f = chi(dq, M.degrees[j]) * c
            for i in range(M.dim):
                v = prod[i, j]
                if v:
                    cols[i, j] = cols.get((i, j), Scalar.zero(M.n)) + f * v
    data = {k: v for k, v in cols.items() if v}
    return ExactMatrix.from_sparse(M.dim, M.dim, data, M.n)


def find_shift_adjoint_witness(L, M: GradedBimodule, window="all"):
    """Search for h with ad(M[h]) not isomorphic to (ad M)[h].

    The rank of each generator's action is an isomorphism invariant; returns
    (h, generator, rank in ad(M[h]), rank in (ad M)[h]) or None.
    """
    L = _lie_or_algebra(L)
    adM = adjoint_module(L, M)
    for h in degree_window(M, M, window):
        a = adjoint_module(L, shift(M, h))
        b = shift(adM, h)
        for x in L.names:
            ra = matrix_rank_kernel(a.left[x])[0]
            rb = matrix_rank_kernel(b.left[x])[0]
            if ra != rb:
                return h, x, ra, rb
    return None


# -- twisted tensor modules -----------------------------------------------------------


def tensor_action_matrix(U: EnvelopingAlgebra, M: GradedModule, N: GradedModule, a: UElement) -> ExactMatrix:
    """a (m (x) n) = sum chi(|a_2|, |m|) a_1 m (x) a_2 n on the basis m_i (x) n_j (index i*dimN + j)."""
    chi = U.eps
    dM, dN = M.dim, N.dim
    acc: dict = {}
    for (p, q), c in U.coproduct(a).terms.items():
        A1 = _left_of(U, M, U.basis_element(p))
        A2 = _left_of(U, N, U.basis_element(q))
        dq = U.degree(q)
        for i in range(dM):
            f = chi(dq, M.degrees[i]) * c
            for j in range(dN):
                col = i * dN + j
                for r in range(dM):
                    x = A1[r, i]
                    if not x:
                        continue
                    for s in range(dN):
                        y = A2[s, j]
                        if y:
                            key = (r * dN + s, col)
                            acc[key] = acc.get(key, Scalar.zero(M.n)) + f * x * y
    return ExactMatrix.from_sparse(dM * dN, dM * dN, {k: v for k, v in acc.items() if v}, M.n)


def twisted_tensor_action(U: EnvelopingAlgebra, M: GradedModule, N: GradedModule) -> GradedModule:
    G = M.group
    names = tuple(f"{a}*{b}" for a in M.names for b in N.names)
    degs = tuple(G.compose(da, db) for da in M.degrees for db in N.degrees)
    left = {x: tensor_action_matrix(U, M, N, U.gen(i)) for i, x in enumerate(U.L.names)}
    return GradedModule(G, M.n, names, degs, left, over=U.L)


# -- F / G twists between bimodules and Lusztig-algebra modules --------------------------


class FiniteBimoduleView:
    """Vectors of a finite bimodule as {basis index: Scalar}."""

    def __init__(self, U: EnvelopingAlgebra, M: GradedBimodule):
        self.U, self.M = U, M
        self._left: dict = {}
        self._right: dict = {}

    def basis(self) -> list[dict]:
        return [{j: Scalar.one(self.M.n)} for j in range(self.M.dim)]

    def degree_of(self, j: int) -> GroupElement:
        return self.M.degrees[j]

    def _mono_left(self, m):
        if m not in self._left:
            self._left[m] = self.M.act_left([self.U.L.names[i] for i in m])
        return self._left[m]

    def _mono_right(self, m):
        if m not in self._right:
            self._right[m] = self.M.act_right([self.U.L.names[i] for i in m])
        return self._right[m]

    def _apply(self, mats, a: UElement, v: dict) -> dict:
        out: dict = {}
        for m, c in a.terms.items():
            A = mats(m)
            for j, x in v.items():
                for i in range(self.M.dim):
                    y = A[i, j]
                    if y:
                        out[i] = out.get(i, Scalar.zero(self.M.n)) + c * x * y
        return {k: val for k, val in out.items() if val}

    def left(self, a: UElement, v: dict) -> dict:
        return self._apply(self._mono_left, a, v)

    def right(self, v: dict, a: UElement) -> dict:
        return self._apply(self._mono_right, a, v)

    def parts(self, v: dict) -> dict:
        out: dict = {}
        for j, c in v.items():
            out.setdefault(self.M.degrees[j], {})[j] = c
        return out

    def add(self, a: dict, b: dict, scale: Scalar) -> dict:
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, Scalar.zero(self.M.n)) + scale * v
        return {k: v for k, v in out.items() if v}

    def zero(self) -> dict:
        return {}


class RegularBimoduleView:
    """U(L) as a bimodule over itself; vectors are UElements."""

    def __init__(self, U: EnvelopingAlgebra):
        self.U = U

    def left(self, a: UElement, v: UElement) -> UElement:
        return self.U.multiply(a, v)

    def right(self, v: UElement, a: UElement) -> UElement:
        return self.U.multiply(v, a)

    def parts(self, v: UElement) -> dict:
        return v.homogeneous_parts()

    def add(self, a: UElement, b: UElement, scale: Scalar) -> UElement:
        return a + b * scale

    def zero(self) -> UElement:
        return self.U.zero()


class LusztigModule:
    """F(M): (a (x) a') m = chi(|a'|, |m|) a.m.S(a') as a left (U (x) U)^chi-module."""

    def __init__(self, view):
        self.view = view
        self.U = view.U

    def act(self, t: TensorUElement, v):
        U, V = self.U, self.view
        out = V.zero()
        for deg, part in V.parts(v).items():
            for (a, a2), c in t.terms.items():
                f = U.eps(U.degree(a2), deg) * c
                w = V.left(U.basis_element(a), V.right(part, U.antipode(U.basis_element(a2))))
                out = V.add(out, w, f)
        return out

    def parts(self, v):
        return self.view.parts(v)

    def add(self, a, b, scale):
        return self.view.add(a, b, scale)

    def zero(self):
        return self.view.zero()


class BimoduleFromLusztig:
    """G(N): a.n = (a (x) 1) n and n.a' = chi^-1(|a'|, |n|) (1 (x) S^-1(a')) n."""

    def __init__(self, N: LusztigModule):
        self.N = N
        self.U = N.U
        self.view = N.view

    def left(self, a: UElement, v):
        return self.N.act(TensorUElement.pure(a, self.U.one()), v)

    def right(self, v, a: UElement):
        U, N = self.U, self.N
        out = N.zero()
        for da, apart in a.homogeneous_parts().items():
            t = TensorUElement.pure(U.one(), U.antipode_inverse(apart))
            for dv, vpart in N.parts(v).items():
                out = N.add(out, N.act(t, vpart), U.eps.inv(da, dv))
        return out

    def parts(self, v):
        return self.N.parts(v)

    def add(self, a, b, scale):
        return self.N.add(a, b, scale)

    def zero(self):
        return self.N.zero()


def bimodule_twist(obj, direction: str):
    """direction 'F': bimodule view -> LusztigModule;  'G': LusztigModule -> bimodule."""
    if direction == "F":
        return LusztigModule(obj)
    if direction == "G":
        if not isinstance(obj, LusztigModule):
            raise TypeError("G expects a LusztigModule")
        U = obj.U
        for i in range(U.dim_L):
            U.antipode_inverse(U.gen(i))
        return BimoduleFromLusztig(obj)
    raise ValueError("direction must be 'F' or 'G'")


def bimodule_matrices(U: EnvelopingAlgebra, M: GradedBimodule, bim) -> GradedBimodule:
    """Generator action matrices of a bimodule-like object on the basis of a finite M."""
    view = FiniteBimoduleView(U, M)
    left, right = {}, {}
    for i, x in enumerate(U.L.names):
        g = U.gen(i)
        for store, fn in ((left, lambda v: bim.left(g, v)), (right, lambda v: bim.right(v, g))):
            data = {}
            for j, e in enumerate(view.basis()):
                for r, c in fn(e).items():
                    data[r, j] = c
            store[x] = ExactMatrix.from_sparse(M.dim, M.dim, data, M.n)
    return GradedBimodule(M.group, M.n, M.names, M.degrees, left, right, over=M.over)
