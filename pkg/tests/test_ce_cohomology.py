from __future__ import annotations

import itertools

import pytest

from colorhom.ce_cohomology import (KoszulChainElement, _scaled, _sub, ce_delta, check_delta_squared,
                                    check_koszul_identities, homotopy_apply, homotopy_check, koszul_d,
                                    koszul_theta_sigma, lie_cohomology_dims, total_cohomology_dims, w_p_basis,
                                    wedge_basis, wedge_normalize)
from colorhom.color_lie import abelian_odd
from colorhom.fixtures import NAMES, load_fixture
from colorhom.gmodules import trivial_module
from colorhom.scalars import ExactMatrix, Scalar, matrix_rank_kernel

X, Y, Z = 0, 1, 2


def chain(L, *terms):
    out = {}
    for u, w, c in terms:
        out[tuple(u), tuple(w)] = Scalar.of(L.n, c)
    return out


# -- exterior algebra -----------------------------------------------------------------

def test_wedge_basis_heis3(heis3):
    L = heis3.lie
    assert wedge_basis(L, 0) == [()]
    assert wedge_basis(L, 1) == [(X,), (Y,), (Z,)]
    assert wedge_basis(L, 2) == [(X, X), (X, Y), (X, Z), (Y, Y), (Y, Z)]


@pytest.mark.parametrize("n", range(6))
def test_wedge_basis_single_odd(n):
    assert wedge_basis(abelian_odd(1), n) == [(0,) * n]


def test_wedge_basis_negative(heis3):
    with pytest.raises(ValueError):
        wedge_basis(heis3.lie, -1)


def test_wedge_normalize(heis3):
    L = heis3.lie
    assert wedge_normalize(L, (Y, X)) == {(X, Y): 1}
    assert wedge_normalize(L, (Z, Z)) == {}
    assert wedge_normalize(L, (X, X)) == {(X, X): 1}
    # even past odd: z^x = -x^z
    assert wedge_normalize(L, (Z, X)) == {(X, Z): -1}


# -- Koszul differential, theta, sigma --------------------------------------------------------

def test_d1(heis3):
    L = heis3.lie
    for u in [(), (X,), (X, Y)]:
        got = koszul_d(L, 1, KoszulChainElement.basis(L, u, (Y,)))
        U = heis3.enveloping()
        expected = {(m, ()): c for m, c in U.normal_form(u + (Y,)).terms.items()}
        assert got == expected


def test_d2_xy(heis3):
    L = heis3.lie
    got = koszul_d(L, 2, KoszulChainElement.basis(L, (), (X, Y)))
    assert got == chain(L, ((X,), (Y,), 1), ((Y,), (X,), 1), ((), (Z,), -1))
    assert koszul_d(L, 1, got) == {}


def test_d0_is_zero(heis3):
    L = heis3.lie
    assert koszul_d(L, 0, KoszulChainElement.basis(L, (X,), ())) == {}


def test_d_rejects_wrong_length(heis3):
    L = heis3.lie
    with pytest.raises(ValueError):
        koszul_d(L, 2, KoszulChainElement.basis(L, (), (X,)))


def test_theta_sigma_values(heis3):
    L = heis3.lie
    one = KoszulChainElement.basis(L, (), ())
    assert koszul_theta_sigma(L, "x", one, "sigma") == chain(L, ((), (X,), 1))
    e = KoszulChainElement.basis(L, (), (Y,))
    assert koszul_theta_sigma(L, "x", e, "theta") == chain(L, ((X,), (Y,), -1), ((), (Z,), 1))
    assert koszul_theta_sigma(L, "z", one, "theta") == chain(L, ((Z,), (), -1))
    with pytest.raises(ValueError):
        koszul_theta_sigma(L, "x", one, "phi")


@pytest.mark.parametrize("fixture", ["heis3", "abelian_odd_2", "abelian_odd_1", "heis_z3"])
def test_koszul_identities(fixture):
    rep = check_koszul_identities(load_fixture(fixture).lie, 3, pbw_cap=3)
    assert rep.passed, rep.to_dict()


def test_koszul_identities_glcolor_low(glcolor):
    rep = check_koszul_identities(glcolor.lie, 1, pbw_cap=1)
    assert rep.passed, rep.to_dict()


def test_abelian_theta_is_first_term_only():
    L = abelian_odd(2)
    e = KoszulChainElement.basis(L, (1,), (0,))
    got = koszul_theta_sigma(L, 0, e, "theta")
    # -eps(|x1|,|x2|) x2.x1 (x) <x1> = x2 x1 = -x1 x2
    assert got == chain(L, ((0, 1), (0,), -1))


def test_corrupted_sign_breaks_sigma_identity(heis3):
    def flipped(cx, e):
        # first sum minus second sum instead of plus
        return _sub(_scaled(cx.d(e, principal=True), Scalar.of(cx.L.n, 2)), cx.d(e))

    rep = check_koszul_identities(heis3.lie, 2, pbw_cap=1, d=flipped)
    assert "sigma_d_plus_d_sigma" in rep.failed_names()
    bad = {c.name: c.witness for c in rep.failures()}
    assert bad["sigma_d_plus_d_sigma"].startswith("y=")


def test_koszul_rejects_zero(heis3):
    with pytest.raises(ValueError):
        check_koszul_identities(heis3.lie, 0)


# -- homotopy -----------------------------------------------------------------------------------

def test_homotopy_p2_example(heis3):
    L = heis3.lie
    e = KoszulChainElement.basis(L, (), (X, Y))
    assert homotopy_apply(L, 2, e) == chain(L, ((), (X, Y), 2))


def test_homotopy_p1_example(heis3):
    L = heis3.lie
    e = KoszulChainElement.basis(L, (X,), ())
    assert homotopy_apply(L, 1, e) == chain(L, ((X,), (), 1))


def test_homotopy_rejects_outside_wp(heis3):
    L = heis3.lie
    with pytest.raises(ValueError, match="not in W"):
        homotopy_apply(L, 2, KoszulChainElement.basis(L, (X,), (Y, Z)))


@pytest.mark.parametrize("fixture", ["heis3", "abelian_odd_2", "heis_z3"])
def test_homotopy_identity(fixture):
    rep = homotopy_check(load_fixture(fixture).lie, 3)
    assert rep.passed, rep.to_dict()
    assert len(rep.checks) == 3


def test_wp_basis_sizes(heis3):
    L = heis3.lie
    assert len(w_p_basis(L, 1)) == 3 + 3


# -- cochains -------------------------------------------------------------------------------------

def test_delta0_trivial_is_zero(heis3):
    L = heis3.lie
    K = trivial_module(L, bimodule=False)
    for h in [(0,), (1,)]:
        assert ce_delta(L, K, 0, h).is_zero()


def test_delta1_heis3_trivial(heis3):
    L = heis3.lie
    K = trivial_module(L, bimodule=False)
    m = ce_delta(L, K, 1, (0,))
    assert m.cols == 1
    assert len([v for v in m.entries if v]) == 1
    assert matrix_rank_kernel(m)[0] == 1


@pytest.mark.parametrize("n", range(4))
def test_abelian_delta_zero(n):
    L = abelian_odd(2)
    K = trivial_module(L, bimodule=False)
    for h in [(0,), (1,)]:
        assert ce_delta(L, K, n, h).is_zero()


def test_abelian_odd_1_table(odd1):
    L = odd1.lie
    dims = lie_cohomology_dims(L, trivial_module(L, bimodule=False), 4)
    # x^n has degree n mod 2 and pairs with K[h] exactly when h = n mod 2
    expected = {(n, (h,)): int(n % 2 == h) for n in range(5) for h in range(2)}
    assert dims == expected


@pytest.mark.parametrize("name", NAMES)
def test_h0_of_trivial(name):
    L = load_fixture(name).lie
    dims = lie_cohomology_dims(L, trivial_module(L, bimodule=False), 0)
    assert dims[0, L.group.identity()] == 1
    assert set(k[0] for k in dims) == {0}


def brute_force_dims(L, M, n_max, h):
    """Cohomology on the tuple model: all maps on L^n subject to eps-alternation."""
    G, eps, deg = L.group, L.eps, L.degrees
    n_ = L.n

    def space(n):
        out = []
        for t in itertools.product(range(L.dim), repeat=n):
            target = G.compose(h, G.product([deg[i] for i in t]))
            out.extend((t, j) for j in range(M.dim) if M.degrees[j] == target)
        return out

    def alt_rows(n, basis):
        idx = {k: i for i, k in enumerate(basis)}
        rows = []
        for (t, j) in basis:
            for p in range(n - 1):
                s = t[:p] + (t[p + 1], t[p]) + t[p + 2:]
                # f(..a,b..) + eps(a,b) f(..b,a..) = 0
                row = {idx[t, j]: Scalar.one(n_)}
                k = idx[s, j]
                row[k] = row.get(k, Scalar.zero(n_)) + eps(deg[t[p]], deg[t[p + 1]])
                rows.append(row)
        return rows

    def delta_rows(n, dom, cod):
        idx = {k: i for i, k in enumerate(dom)}
        rows = []
        for (t, j) in cod:
            row = {}

            def add(key, c):
                if key in idx and c:
                    row[idx[key]] = row.get(idx[key], Scalar.zero(n_)) + c

            e_i = [Scalar.one(n_)] * len(t)
            for i in range(len(t)):
                c = Scalar.one(n_)
                for p in range(i):
                    c = c * eps(deg[t[p]], deg[t[i]])
                e_i[i] = c
            for i in range(len(t)):
                rest = t[:i] + t[i + 1:]
                sign = 1 if i % 2 == 0 else -1
                A = M.left[L.names[t[i]]]
                for k in range(M.dim):
                    add((rest, k), A[j, k] * e_i[i] * sign)
            for i in range(len(t)):
                for k in range(i + 1, len(t)):
                    rest = tuple(t[p] for p in range(len(t)) if p not in (i, k))
                    sign = 1 if (i + k) % 2 == 0 else -1
                    c = e_i[i] * e_i[k] * eps(deg[t[k]], deg[t[i]]) * sign
                    for b, v in L.bracket_basis(t[i], t[k]).items():
                        add(((b,) + rest, j), c * v)
            rows.append(row)
        return rows

    def rank(rows, cols):
        m = ExactMatrix.from_sparse(len(rows), cols, {(r, c): v for r, row in enumerate(rows)
                                                      for c, v in row.items() if v}, n_)
        return matrix_rank_kernel(m)[0]

    spaces = [space(n) for n in range(n_max + 2)]
    alt = [alt_rows(n, spaces[n]) for n in range(n_max + 2)]
    dims = {}
    for n in range(n_max + 1):
        cols = len(spaces[n])
        dn = delta_rows(n, spaces[n], spaces[n + 1])
        z = cols - rank(alt[n] + dn, cols)
        if n == 0:
            b = 0
        else:
            pcols = len(spaces[n - 1])
            dp = delta_rows(n - 1, spaces[n - 1], spaces[n])
            b = (pcols - rank(alt[n - 1], pcols)) - (pcols - rank(alt[n - 1] + dp, pcols))
        dims[n] = z - b
    return dims


@pytest.mark.parametrize("fixture,module", [("heis3", "trivial"), ("heis3", "step2"), ("heis3", "adjoint"),
                                            ("heis_z3", "trivial"), ("heis_z3", "natural"),
                                            ("abelian_odd_2", "trivial")])
def test_cohomology_against_tuple_model(fixture, module):
    spec = load_fixture(fixture)
    L = spec.lie
    M = spec.module(module)
    if M.is_bimodule:
        M = M.left_module()
    dims = lie_cohomology_dims(L, M, 2)
    for h in L.group.elements():
        oracle = brute_force_dims(L, M, 2, h)
        for n in range(3):
            assert dims[n, h] == oracle[n], (n, h)


@pytest.mark.parametrize("name", NAMES)
def test_delta_squared(name):
    spec = load_fixture(name)
    for m in spec.modules:
        M = spec.module(m)
        rep = check_delta_squared(spec.lie, M, 3)
        assert rep.passed, (m, rep.to_dict())


def test_total_equals_sum_over_degrees(odd1):
    L = odd1.lie
    for m in odd1.modules:
        M = odd1.module(m)
        per_h = lie_cohomology_dims(L, M, 2)
        total = total_cohomology_dims(L, M, 2)
        for n in range(3):
            assert total[n] == sum(v for (k, _), v in per_h.items() if k == n)


def test_delta_preserves_degree_blocks(heis_z3):
    # the block for h only involves cochains of internal degree h
    L = heis_z3.lie
    M = heis_z3.module("natural")
    full = ce_delta(L, M, 1, None)
    assert full.rows == sum(ce_delta(L, M, 1, h).rows for h in L.group.elements())
    assert matrix_rank_kernel(full)[0] == sum(matrix_rank_kernel(ce_delta(L, M, 1, h))[0]
                                             for h in L.group.elements())
