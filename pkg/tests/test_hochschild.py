from __future__ import annotations

import pytest

from colorhom.fixtures import load_fixture
from colorhom.gmodules import adjoint_module, shift, trivial_module, validate_module
from colorhom.ce_cohomology import lie_cohomology_dims
from colorhom.hochschild import (FiniteGradedAlgebra, centralizer_dim, check_bar_squared, compare_theorem5,
                                 hochschild_dims, regular_bimodule, trivial_algebra, truncate_enveloping,
                                 validate_algebra)

FINITE = ["abelian_odd_1", "abelian_odd_2"]


def test_truncate_single_odd(odd1):
    A = truncate_enveloping(odd1.lie)
    assert A.names == ("1", "x")
    assert A.degrees == ((0,), (1,))
    assert A.product(1, 1) == {}
    assert validate_algebra(A).passed


def test_truncate_two_odd(odd2):
    A = truncate_enveloping(odd2.lie)
    assert A.dim == 4
    assert validate_algebra(A).passed
    # x1 x2 = -x2 x1
    i, j = A.names.index("x1"), A.names.index("x2")
    (k1, c1), = A.product(i, j).items()
    (k2, c2), = A.product(j, i).items()
    assert k1 == k2 and c1 == -c2


def test_truncate_heis3_rejected(heis3):
    with pytest.raises(ValueError, match="not finite-dimensional at this cap"):
        truncate_enveloping(heis3.lie)


def test_trivial_algebra():
    A = trivial_algebra()
    dims = hochschild_dims(A, regular_bimodule(A), 3)
    assert dims == {(0, ()): 1, (1, ()): 0, (2, ()): 0, (3, ()): 0}


def test_hh0_dual_numbers(odd1):
    A = truncate_enveloping(odd1.lie)
    M = regular_bimodule(A)
    dims = hochschild_dims(A, M, 0)
    assert dims[0, (0,)] == 1
    assert dims[0, (0,)] == centralizer_dim(A, M, (0,))


@pytest.mark.parametrize("fixture", FINITE)
@pytest.mark.parametrize("module", ["regular", "trivial"])
def test_hh0_is_centralizer(fixture, module):
    spec = load_fixture(fixture)
    A = spec.finite_algebra()
    M = spec.module(module)
    dims = hochschild_dims(A, M, 0)
    for h in A.group.elements():
        assert dims[0, h] == centralizer_dim(A, M, h)


@pytest.mark.parametrize("fixture", FINITE)
@pytest.mark.parametrize("module", ["regular", "trivial"])
def test_bar_squared(fixture, module):
    spec = load_fixture(fixture)
    A = spec.finite_algebra()
    M = spec.module(module)
    assert check_bar_squared(A, M, 3).passed
    assert check_bar_squared(A, M, 2, normalized=False).passed


def test_normalized_matches_unnormalized(odd1):
    A = odd1.finite_algebra()
    for m in ("regular", "trivial"):
        M = odd1.module(m)
        assert hochschild_dims(A, M, 3) == hochschild_dims(A, M, 3, normalized=False)


@pytest.mark.parametrize("fixture", FINITE)
@pytest.mark.parametrize("module", ["regular", "trivial"])
def test_hochschild_matches_lie(fixture, module):
    spec = load_fixture(fixture)
    rep = compare_theorem5(spec.lie, spec.module(module), 3)
    assert rep.all_equal, rep.to_dict()
    assert len(rep.cells) == 4 * 2


def test_comparison_regular_values(odd1):
    rep = compare_theorem5(odd1.lie, odd1.module("regular"), 3)
    assert [rep.cells[n, (0,)][0] for n in range(4)] == [1, 1, 1, 1]
    assert [rep.cells[n, (1,)][0] for n in range(4)] == [1, 0, 0, 0]


def test_comparison_h0_invariants(odd2):
    # HH^0 against the invariants of ad(M[h]) solved without the CE complex
    L = odd2.lie
    A = odd2.finite_algebra()
    M = odd2.module("regular")
    for h in L.group.elements():
        ad = adjoint_module(L, shift(M, h))
        assert validate_module(ad).passed
        inv = centralizer_dim(A, M, h)
        assert lie_cohomology_dims(L, ad, 0, [L.group.identity()])[0, L.group.identity()] == inv


def test_comparison_needs_finite_u(heis3):
    with pytest.raises(ValueError, match="finite-dimensional"):
        compare_theorem5(heis3.lie, trivial_module(heis3.lie), 1)


def test_comparison_report_serializes(odd1):
    d = compare_theorem5(odd1.lie, odd1.module("trivial"), 1).to_dict()
    assert d["all_equal"] is True
    assert {"n", "h", "hochschild", "lie", "equal"} <= set(d["cells"][0])


def test_validate_algebra_catches_nonassociative():
    from colorhom.grading import GroupSpec
    G = GroupSpec(())
    A = FiniteGradedAlgebra(G, 1, ("1", "a"), ((), ()),
                            {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1, 1: 1}}, 0, (1,))
    assert validate_algebra(A).passed
    # (a*a)*a = b*a = 0 but a*(a*a) = a*b = 1
    B = FiniteGradedAlgebra(G, 1, ("1", "a", "b"), ((), (), ()),
                            {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1},
                             (1, 1): {2: 1}, (1, 2): {0: 1}}, 0, (1,))
    assert "associativity" in validate_algebra(B).failed_names()
