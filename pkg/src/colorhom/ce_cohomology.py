"""The eps-exterior algebra, the color Koszul complex and Chevalley-Eilenberg cochains.

Chains of C_n = U(L) (x) wedge^n are dicts ``{(pbw_monomial, wedge): Scalar}``.
Cohomology is computed only through the finite cochain model
Hom_gr(wedge^n L, M[h]); the Koszul side is used for identity checks on
PBW-length truncated slices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from colorhom.color_lie import ColorLieAlgebra
from colorhom.enveloping import EnvelopingAlgebra
from colorhom.gmodules import GradedModule, degree_window
from colorhom.grading import GroupElement
from colorhom.reports import ValidationReport
from colorhom.scalars import ExactMatrix, Scalar, format_scalar, matrix_rank_kernel

Wedge = tuple[int, ...]
ChainKey = tuple[tuple[int, ...], Wedge]


def _acc(out: dict, key, val: Scalar) -> None:
    v = out[key] + val if key in out else val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _sub(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, v in b.items():
        _acc(out, k, -v)
    return out


def _scaled(a: Mapping, c: Scalar) -> dict:
    return {k: v * c for k, v in a.items() if v * c}


def _add_into(out: dict, a: Mapping, c: Scalar | None = None) -> None:
    for k, v in a.items():
        _acc(out, k, v * c if c is not None else v)


# -- eps-exterior algebra ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _wedge_basis(L: ColorLieAlgebra, n: int) -> tuple[Wedge, ...]:
    out: list[Wedge] = []

    def rec(prefix: list[int], start: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for i in range(start, L.dim):
            rec(prefix + [i], i if L.parity(i) == -1 else i + 1)

    rec([], 0)
    return tuple(out)


def wedge_basis(L: ColorLieAlgebra, n: int) -> list[Wedge]:
    """Non-decreasing index tuples of length n, strictly increasing at even indices."""
    if n < 0:
        raise ValueError("wedge degree must be non-negative")
    return list(_wedge_basis(L, n))


def wedge_degree(L: ColorLieAlgebra, w: Sequence[int]) -> GroupElement:
    return L.group.product([L.degrees[i] for i in w])


def wedge_normalize(L: ColorLieAlgebra, word: Sequence[int], coeff=1) -> dict[Wedge, Scalar]:
    """Sort with v^u = -eps(|v|,|u|) u^v; an even factor repeated gives zero."""
    c = Scalar.of(L.n, coeff)
    w = list(word)
    eps, deg = L.eps, L.degrees
    for end in range(len(w) - 1, 0, -1):
        for p in range(end):
            if w[p] > w[p + 1]:
                c = -(eps(deg[w[p]], deg[w[p + 1]]) * c)
                w[p], w[p + 1] = w[p + 1], w[p]
    for p in range(len(w) - 1):
        if w[p] == w[p + 1] and L.parity(w[p]) == 1:
            return {}
    return {tuple(w): c} if c else {}


def format_chain(L: ColorLieAlgebra, elt: Mapping[ChainKey, Scalar]) -> str:
    if not elt:
        return "0"
    parts = []
    for (u, w), c in sorted(elt.items()):
        un = ".".join(L.names[i] for i in u) if u else "1"
        wn = ",".join(L.names[i] for i in w)
        parts.append(f"({format_scalar(c)})*{un}<{wn}>")
    return " + ".join(parts)


# -- Koszul complex ---------------------------------------------------------------------------


class KoszulChainElement(dict):
    """Mapping (PBW monomial, wedge) -> Scalar with no zero values."""

    @classmethod
    def basis(cls, L: ColorLieAlgebra, u: Sequence[int], w: Sequence[int]) -> KoszulChainElement:
        return cls({(tuple(u), tuple(w)): Scalar.one(L.n)})


class KoszulComplex:
    def __init__(self, L: ColorLieAlgebra, U: EnvelopingAlgebra | None = None):
        self.L = L
        self.U = U or EnvelopingAlgebra(L)
        self.one = Scalar.one(L.n)
        self._cache: dict = {}

    def _eps_i(self, x: Sequence[int]) -> list[Scalar]:
        eps, deg = self.L.eps, self.L.degrees
        out = []
        for i in range(len(x)):
            e = self.one
            for h in range(i):
                e = e * eps(deg[x[h]], deg[x[i]])
            out.append(e)
        return out

    def _u_times(self, u: tuple, i: int, c: Scalar) -> dict:
        return self.U.normal_form(u + (i,), c).terms

    def _insert_bracket(self, out: dict, u: tuple, br: Mapping[int, Scalar], rest: list,
                        pos: int, c: Scalar) -> None:
        for k, bc in br.items():
            word = rest[:pos] + [k] + rest[pos:]
            for w, wc in wedge_normalize(self.L, word, c * bc).items():
                _acc(out, (u, w), wc)

    def _linear(self, cache: dict, tag, raw, elt: Mapping[ChainKey, Scalar]) -> dict:
        # evaluate on basis elements once, then combine
        out: dict = {}
        for key, c in elt.items():
            ck = (tag, key)
            img = cache.get(ck)
            if img is None:
                img = raw({key: self.one})
                cache[ck] = img
            for k2, v in img.items():
                _acc(out, k2, c * v)
        return out

    def d(self, elt: Mapping[ChainKey, Scalar], principal: bool = False, top: int | None = None) -> dict:
        """d_n, or with principal=True only the first sum keeping PBW length ``top``."""
        if principal:
            return self._d_raw(elt, True, top)
        return self._linear(self._cache, "d", self._d_raw, elt)

    def theta(self, y: int, elt: Mapping[ChainKey, Scalar]) -> dict:
        return self._linear(self._cache, ("theta", y), lambda e: self._theta_raw(y, e), elt)

    def sigma(self, y: int, elt: Mapping[ChainKey, Scalar]) -> dict:
        return self._linear(self._cache, ("sigma", y), lambda e: self._sigma_raw(y, e), elt)

    def _d_raw(self, elt: Mapping[ChainKey, Scalar], principal: bool = False, top: int | None = None) -> dict:
        L = self.L
        eps, deg = L.eps, L.degrees
        out: dict = {}
        for (u, x), c in elt.items():
            n = len(x)
            if n == 0:
                continue
            ei = self._eps_i(x)
            for i in range(n):
                sign = c * ei[i] if i % 2 == 0 else -(c * ei[i])
                rest = x[:i] + x[i + 1:]
                for m, v in self._u_times(u, x[i], sign).items():
                    if principal and len(m) != top:
                        continue
                    _acc(out, (m, rest), v)
            if principal:
                continue
            for i in range(n):
                for j in range(i + 1, n):
                    br = L.bracket_basis(x[i], x[j])
                    if not br:
                        continue
                    f = ei[i] * ei[j] * eps(deg[x[j]], deg[x[i]]) * c
                    if (i + j) % 2:  # 1-based i+j has the same parity
                        f = -f
                    rest = [x[k] for k in range(n) if k != i and k != j]
                    self._insert_bracket(out, u, br, rest, 0, f)
        return out

    def _theta_raw(self, y: int, elt: Mapping[ChainKey, Scalar]) -> dict:
        L, U = self.L, self.U
        eps, deg = L.eps, L.degrees
        dy = deg[y]
        out: dict = {}
        for (u, x), c in elt.items():
            du = U.degree(u)
            for m, v in self._u_times(u, y, -(eps(dy, du) * c)).items():
                _acc(out, (m, x), v)
            acc_deg = du
            for i in range(len(x)):
                br = L.bracket_basis(y, x[i])
                if br:
                    f = eps(dy, acc_deg) * c
                    rest = list(x[:i]) + list(x[i + 1:])
                    self._insert_bracket(out, u, br, rest, i, f)
                acc_deg = L.group.compose(acc_deg, deg[x[i]])
        return out

    def _sigma_raw(self, y: int, elt: Mapping[ChainKey, Scalar]) -> dict:
        L, U = self.L, self.U
        out: dict = {}
        for (u, x), c in elt.items():
            f = L.eps(L.degrees[y], U.degree(u)) * c
            for w, wc in wedge_normalize(L, (y,) + x, f).items():
                _acc(out, (u, w), wc)
        return out

    def theta_vec(self, vec: Mapping[int, Scalar], elt: Mapping[ChainKey, Scalar]) -> dict:
        out: dict = {}
        for k, c in vec.items():
            _add_into(out, self.theta(k, elt), c)
        return out

    def sigma_vec(self, vec: Mapping[int, Scalar], elt: Mapping[ChainKey, Scalar]) -> dict:
        out: dict = {}
        for k, c in vec.items():
            _add_into(out, self.sigma(k, elt), c)
        return out

    # homotopy on the associated graded pieces W^p

    def t_p(self, elt: Mapping[ChainKey, Scalar]) -> dict:
        L, U = self.L, self.U
        eps, deg = L.eps, L.degrees
        out: dict = {}
        for (k, l), c in elt.items():
            m = len(k)
            for i in range(m):
                f = c
                for h in range(i + 1, m):
                    f = f * eps(deg[k[i]], deg[k[h]])
                rest = k[:i] + k[i + 1:]
                for w, wc in wedge_normalize(L, (k[i],) + l, f).items():
                    _acc(out, (rest, w), wc)
        return out


def _complex(L: ColorLieAlgebra) -> KoszulComplex:
    cx = L.__dict__.get("_koszul")
    if cx is None:
        cx = KoszulComplex(L)
        L.__dict__["_koszul"] = cx
    return cx


def _check_len(elt: Mapping[ChainKey, Scalar], n: int) -> None:
    for (_, w) in elt:
        if len(w) != n:
            raise ValueError(f"chain term with wedge length {len(w)} is not in C_{n}")


def koszul_d(L: ColorLieAlgebra, n: int, elt: Mapping[ChainKey, Scalar]) -> KoszulChainElement:
    _check_len(elt, n)
    return KoszulChainElement(_complex(L).d(elt))


def koszul_theta_sigma(L: ColorLieAlgebra, y: int | str, elt: Mapping[ChainKey, Scalar],
                       which: str) -> KoszulChainElement:
    cx = _complex(L)
    y = L.index(y) if isinstance(y, str) else y
    if which in ("theta", "θ"):
        return KoszulChainElement(cx.theta(y, elt))
    if which in ("sigma", "σ"):
        return KoszulChainElement(cx.sigma(y, elt))
    raise ValueError("which must be 'theta' or 'sigma'")


def check_koszul_identities(L: ColorLieAlgebra, n_max: int, pbw_cap: int = 3,
                            d: Callable[[KoszulComplex, dict], dict] | None = None) -> ValidationReport:
    """theta commutator, sigma-bracket, sigma d + d sigma = -theta, theta d = d theta, d d = 0.

    Every basis element u (x) w of C_n with n <= n_max and PBW length <= pbw_cap is
    tested against every generator (pair). ``d`` overrides the differential for
    mutation testing.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    cx = _complex(L)
    dd = (lambda e: d(cx, e)) if d else cx.d
    rep = ValidationReport("koszul")
    gens = range(L.dim)
    eps, deg = L.eps, L.degrees
    witnesses: dict[str, str | None] = {k: None for k in ("theta_bracket", "sigma_bracket", "sigma_d_plus_d_sigma", "theta_commutes_with_d", "d_squared")}
    counts = dict.fromkeys(witnesses, 0)
    pbw = cx.U.pbw_basis(pbw_cap)

    def note(key: str, resid: dict, where: str) -> None:
        counts[key] += 1
        if resid and witnesses[key] is None:
            witnesses[key] = f"{where}: residual {format_chain(L, resid)}"

    for n in range(0, n_max + 1):
        for u in pbw:
            for w in wedge_basis(L, n):
                e = {(u, w): Scalar.one(L.n)}
                label = format_chain(L, e)
                de = dd(e)
                th = {y: cx.theta(y, e) for y in gens}
                sg = {y: cx.sigma(y, e) for y in gens}
                for x in gens:
                    for y in gens:
                        c = eps(deg[x], deg[y])
                        br = L.bracket_basis(x, y)
                        lhs = _sub(cx.theta(x, th[y]), _scaled(cx.theta(y, th[x]), c))
                        note("theta_bracket", _sub(lhs, cx.theta_vec(br, e)), f"x={L.names[x]}, y={L.names[y]}, on {label}")
                        rhs = _sub(cx.theta(x, sg[y]), _scaled(cx.sigma(y, th[x]), c))
                        note("sigma_bracket", _sub(cx.sigma_vec(br, e), rhs), f"x={L.names[x]}, y={L.names[y]}, on {label}")
                for y in gens:
                    lhs = cx.sigma(y, de) if n > 0 else {}
                    _add_into(lhs, dd(sg[y]))
                    note("sigma_d_plus_d_sigma", _sub(lhs, _scaled(th[y], -Scalar.one(L.n))), f"y={L.names[y]}, on {label}")
                    if n > 0:
                        note("theta_commutes_with_d", _sub(cx.theta(y, de), dd(th[y])), f"y={L.names[y]}, on {label}")
                if n > 1:
                    note("d_squared", dd(de), f"on {label}")
    for key, w in witnesses.items():
        rep.add(key, w is None, w)
    rep.info["evaluations"] = counts
    return rep


# -- filtration homotopy ---------------------------------------------------------------------


def homotopy_apply(L: ColorLieAlgebra, p: int, elt: Mapping[ChainKey, Scalar]) -> dict:
    """(d^p t^p + t^p d^p)(elt) on W^p; every term must have PBW length + wedge length = p."""
    for (u, w) in elt:
        if len(u) + len(w) != p:
            raise ValueError(f"term with m+n = {len(u) + len(w)} is not in W^{p}")
    cx = _complex(L)
    out: dict = {}
    for (u, w), c in elt.items():
        single = {(u, w): c}
        t = cx.t_p(single)
        _add_into(out, cx.d(t, principal=True, top=len(u)))
        # d^p raises the PBW length by one; d_0 is zero
        _add_into(out, cx.t_p(cx.d(single, principal=True, top=len(u) + 1)))
    return out


def w_p_basis(L: ColorLieAlgebra, p: int) -> list[ChainKey]:
    U = _complex(L).U
    out = []
    for m in range(p + 1):
        for u in U.pbw_basis(m):
            if len(u) != m:
                continue
            for w in wedge_basis(L, p - m):
                out.append((u, w))
    return out


def homotopy_check(L: ColorLieAlgebra, p_max: int) -> ValidationReport:
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    rep = ValidationReport("homotopy")
    sizes = {}
    for p in range(1, p_max + 1):
        witness = None
        basis = w_p_basis(L, p)
        sizes[p] = len(basis)
        for key in basis:
            e = {key: Scalar.one(L.n)}
            got = homotopy_apply(L, p, e)
            resid = _sub(got, _scaled(e, Scalar.of(L.n, p)))
            if resid:
                witness = f"on {format_chain(L, e)}: (dt+td) - {p}*Id = {format_chain(L, resid)}"
                break
        rep.add(f"dt+td=p[p={p}]", witness is None, witness)
    rep.info["w_p_sizes"] = sizes
    return rep


# -- Chevalley-Eilenberg cochains ------------------------------------------------------------------


def cochain_basis(L: ColorLieAlgebra, M: GradedModule, n: int, h: GroupElement | None) -> list[tuple[Wedge, int]]:
    """Pairs (wedge, module index) with deg_M(m) = h deg(wedge); h=None drops the degree condition."""
    G = L.group
    out = []
    for w in wedge_basis(L, n):
        target = None if h is None else G.compose(h, wedge_degree(L, w))
        for j in range(M.dim):
            if target is None or M.degrees[j] == target:
                out.append((w, j))
    return out


def ce_delta(L: ColorLieAlgebra, M: GradedModule, n: int, h: GroupElement | None) -> ExactMatrix:
    """Matrix of delta^n : Hom_gr(wedge^n L, M[h]) -> Hom_gr(wedge^(n+1) L, M[h]).

    Columns index (wedge, m) cochains f with f(wedge) = m; rows index the target
    basis likewise. ``h=None`` uses all linear maps, ignoring the grading.
    """
    if h is not None:
        h = L.group.element(h)
    dom = cochain_basis(L, M, n, h)
    cod = cochain_basis(L, M, n + 1, h)
    dom_idx = {k: i for i, k in enumerate(dom)}
    row_idx = {k: i for i, k in enumerate(cod)}
    eps, deg = L.eps, L.degrees
    cx = _complex(L)
    data: dict = {}

    # evaluate delta(f) on each target wedge, expressed through the source coordinates
    for x in wedge_basis(L, n + 1):
        ei = cx._eps_i(x)
        # (wedge of f, coefficient, operator: None for identity or generator index)
        pieces: list[tuple[Wedge, Scalar, int | None]] = []
        for i in range(n + 1):
            sign = ei[i] if i % 2 == 0 else -ei[i]
            pieces.append((x[:i] + x[i + 1:], sign, x[i]))
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = L.bracket_basis(x[i], x[j])
                if not br:
                    continue
                f = ei[i] * ei[j] * eps(deg[x[j]], deg[x[i]])
                if (i + j) % 2:
                    f = -f
                rest = [x[k] for k in range(n + 1) if k != i and k != j]
                for k, bc in br.items():
                    for w, wc in wedge_normalize(L, [k] + rest, f * bc).items():
                        pieces.append((w, wc, None))
        for w, coeff, op in pieces:
            for j in range(M.dim):
                col = dom_idx.get((w, j))
                if col is None:
                    continue
                if op is None:
                    key = (x, j)
                    if key in row_idx:
                        _acc(data, (row_idx[key], col), coeff)
                else:
                    A = M.left[L.names[op]]
                    for r in range(M.dim):
                        a = A[r, j]
                        if a:
                            key = (x, r)
                            if key in row_idx:
                                _acc(data, (row_idx[key], col), coeff * a)
    return ExactMatrix.from_sparse(len(cod), len(dom), data, L.n)


def ce_window(L: ColorLieAlgebra, M: GradedModule, n_max: int, window="all") -> list[GroupElement]:
    G = L.group
    if window != "all":
        return [G.element(h) for h in window]
    if G.is_finite:
        return list(G.elements())
    hs = set()
    for n in range(n_max + 2):
        for w in wedge_basis(L, n):
            dw = G.inverse(wedge_degree(L, w))
            for d in M.degrees:
                hs.add(G.compose(d, dw))
    return sorted(hs)


def lie_cohomology_dims(L: ColorLieAlgebra, M: GradedModule, n_max: int,
                        degree_window="all") -> dict[tuple[int, GroupElement], int]:
    """dim H^n(L, M)_h = dim H^n_gr(L, M[h]) for 0 <= n <= n_max and h in the window."""
    out = {}
    for h in ce_window(L, M, n_max, degree_window):
        prev_rank = 0
        for n in range(n_max + 1):
            rank, kernel = matrix_rank_kernel(ce_delta(L, M, n, h))
            out[n, h] = kernel - prev_rank
            prev_rank = rank
    return out


def total_cohomology_dims(L: ColorLieAlgebra, M: GradedModule, n_max: int) -> dict[int, int]:
    """Cohomology of the complex of all linear maps wedge^n L -> M, in one pass."""
    out = {}
    prev_rank = 0
    for n in range(n_max + 1):
        rank, kernel = matrix_rank_kernel(ce_delta(L, M, n, None))
        out[n] = kernel - prev_rank
        prev_rank = rank
    return out


def check_delta_squared(L: ColorLieAlgebra, M: GradedModule, n_max: int, degree_window="all") -> ValidationReport:
    rep = ValidationReport("ce_delta_squared")
    witness = None
    blocks = 0
    for h in ce_window(L, M, n_max, degree_window):
        for n in range(n_max):
            prod = ce_delta(L, M, n + 1, h) @ ce_delta(L, M, n, h)
            blocks += 1
            if not prod.is_zero() and witness is None:
                witness = f"delta^{n + 1} delta^{n} != 0 in degree {list(h)}"
    rep.add("delta_squared", witness is None, witness)
    rep.info["blocks"] = blocks
    return rep
