from __future__ import annotations

import itertools

import pytest

from colorhom.enveloping import EnvelopingAlgebra, TensorUElement
from colorhom.fixtures import NAMES, load_fixture
from colorhom.gmodules import (FiniteBimoduleView, GradedBimodule, GradedModule, LusztigModule,
                               RegularBimoduleView, adjoint_action_hopf, adjoint_module, bimodule_matrices,
                               bimodule_twist, find_shift_adjoint_witness, hom_dims, hom_gr_dim, shift,
                               trivial_module, twisted_tensor_action, validate_module)
from colorhom.grading import GroupSpec
from colorhom.hochschild import FiniteGradedAlgebra, regular_bimodule
from colorhom.scalars import ExactMatrix, rank_dense_column_pivot

Z2 = GroupSpec((2,))


def mat(rows, n=2):
    return ExactMatrix.from_rows(rows, n)


# -- validation ---------------------------------------------------------------------

def test_trivial_module_heis3(heis3):
    assert validate_module(trivial_module(heis3.lie)).passed


def test_regular_bimodule_abelian(odd1):
    M = odd1.module("regular")
    assert M.is_bimodule
    assert validate_module(M).passed


def test_bracket_incompatible_module(heis3):
    bad = mat([[0, 1], [1, 0]])
    zero = ExactMatrix.zeros(2, 2, 2)
    M = GradedModule(Z2, 2, ("a", "b"), ((0,), (1,)), {"x": bad, "y": zero, "z": zero}, over=heis3.lie)
    assert validate_module(M).failed_names() == {"bracket_compatibility"}


def test_missing_generator_reported(heis3):
    zero = ExactMatrix.zeros(1, 1, 2)
    M = GradedModule(Z2, 2, ("a",), ((0,),), {"x": zero}, over=heis3.lie)
    assert validate_module(M).failed_names() == {"generators"}


@pytest.mark.parametrize("name", NAMES)
def test_fixture_modules_validate(name):
    spec = load_fixture(name)
    for m in spec.modules:
        rep = validate_module(spec.module(m))
        assert rep.passed, (m, rep.to_dict())


# -- shift and Hom ---------------------------------------------------------------------

def test_shift_by_identity(heis3):
    M = heis3.module("step2")
    assert shift(M, (0,)).equals(M)


def test_shift_relabels_degree():
    M = GradedModule(Z2, 2, ("v",), ((1,),), {})
    assert shift(M, (1,)).degrees == ((0,),)


def test_double_shift():
    G = GroupSpec((3, 3))
    M = GradedModule(G, 3, ("a", "b"), ((1, 2), (0, 1)), {})
    h = (2, 1)
    assert shift(shift(M, h), G.inverse(h)).equals(M)


def test_hom_trivial_to_trivial(heis3):
    K = trivial_module(heis3.lie, bimodule=False)
    assert hom_dims(heis3.lie, K, K) == {(0,): 1, (1,): 0}


def dual_numbers():
    # K[x]/x^2 with x in degree 1
    return FiniteGradedAlgebra(Z2, 1, ("1", "x"), ((0,), (1,)),
                               {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, 0, (1,), {1: (1,)})


def brute_force_hom_dim(M, N, gens, h):
    """Kernel of f -> (N.g f - f M.g)_g on the space of all degree-h matrices."""
    G = M.group
    slots = [(a, b) for a in range(N.dim) for b in range(M.dim) if N.degrees[a] == G.compose(M.degrees[b], h)]
    if not slots:
        return 0
    columns = []
    for a, b in slots:
        f = ExactMatrix.from_sparse(N.dim, M.dim, {(a, b): 1}, M.n)
        col = []
        for g in gens:
            col.extend((N.left[g] @ f - f @ M.left[g]).entries)
        columns.append(col)
    rows = [[columns[k][r] for k in range(len(slots))] for r in range(len(columns[0]))]
    return len(slots) - rank_dense_column_pivot(ExactMatrix.from_rows(rows, M.n, len(slots)))


def test_hom_dual_numbers():
    A = dual_numbers()
    R = regular_bimodule(A).left_module()
    dims = hom_dims(A, R, R)
    assert dims == {(0,): 1, (1,): 1}
    assert sum(dims.values()) == 2
    for h, d in dims.items():
        assert d == brute_force_hom_dim(R, R, ["x"], h)


def test_hom_disjoint_supports_zero_action():
    M = GradedModule(Z2, 1, ("m",), ((0,),), {})
    N = GradedModule(Z2, 1, ("n",), ((1,),), {})
    A = dual_numbers()
    zero = ExactMatrix.zeros(1, 1, 1)
    M.left["x"] = zero
    N.left["x"] = zero
    assert hom_gr_dim(A, M, N) == 0


@pytest.mark.parametrize("fixture,module", [("heis3", "step2"), ("heis_z3", "natural"), ("glcolor", "natural"),
                                            ("abelian_odd_2", "regular")])
def test_hom_matches_shifted_hom_gr(fixture, module):
    spec = load_fixture(fixture)
    M = spec.module(module)
    for N in (M, trivial_module(spec.lie, bimodule=False)):
        dims = hom_dims(spec.lie, M, N)
        for h, d in dims.items():
            assert d == hom_gr_dim(spec.lie, M, shift(N, h))
            assert d == brute_force_hom_dim(M, N, spec.lie.names, h)


# -- adjoint module ------------------------------------------------------------------------

def test_adjoint_on_regular_heis3(heis3_U):
    U = heis3_U
    x, y, z = U.gen("x"), U.gen("y"), U.gen("z")
    eps = U.eps
    lie_form = U.multiply(x, y) - U.multiply(y, x) * eps((1,), (1,))
    assert lie_form == z
    hopf_form = LusztigModule(RegularBimoduleView(U)).act(U.coproduct(x), y)
    assert hopf_form == z


def test_adjoint_of_trivial_is_zero(heis3):
    ad = adjoint_module(heis3.lie, trivial_module(heis3.lie))
    assert all(not m.sparse_rows()[0] for m in ad.left.values())


def test_central_element_acts_by_zero(heis3_U):
    U = heis3_U
    z = U.gen("z")
    for m in U.pbw_basis(3):
        u = U.basis_element(m)
        assert U.multiply(z, u) == U.multiply(u, z)


@pytest.mark.parametrize("fixture", ["abelian_odd_1", "abelian_odd_2"])
def test_lie_and_hopf_adjoint_agree(fixture):
    spec = load_fixture(fixture)
    U = spec.enveloping()
    M = spec.module("regular")
    ad = adjoint_module(spec.lie, M)
    assert validate_module(ad).passed
    for x in spec.lie.names:
        assert adjoint_action_hopf(U, M, U.gen(x)) == ad.left[x]
    # on words the Hopf form is the composite of generator actions
    for w in itertools.product(spec.lie.names, repeat=2):
        assert adjoint_action_hopf(U, M, U.monomial(w)) == ad.act_left(w)


@pytest.mark.parametrize("name", NAMES)
def test_adjoint_of_bimodules_validates(name):
    spec = load_fixture(name)
    for m in spec.modules:
        M = spec.module(m)
        if M.is_bimodule:
            assert validate_module(adjoint_module(spec.lie, M)).passed


def test_shift_does_not_commute_with_adjoint(odd1):
    M = odd1.module("regular")
    found = find_shift_adjoint_witness(odd1.lie, M)
    assert found is not None
    h, x, ra, rb = found
    assert ra != rb
    a = adjoint_module(odd1.lie, shift(M, h))
    b = shift(adjoint_module(odd1.lie, M), h)
    assert a.left[x] != b.left[x]


def test_shift_commutes_with_adjoint_for_trivial(heis3):
    assert find_shift_adjoint_witness(heis3.lie, trivial_module(heis3.lie)) is None


# -- twisted tensor ---------------------------------------------------------------------------

def test_tensor_with_unit(heis3, heis3_U):
    M = heis3.module("step2")
    K = trivial_module(heis3.lie, bimodule=False)
    for T in (twisted_tensor_action(heis3_U, M, K), twisted_tensor_action(heis3_U, K, M)):
        assert T.degrees == M.degrees
        assert T.left == M.left


def test_tensor_associative(heis3, heis3_U):
    U = heis3_U
    M = heis3.module("step2")
    MM = twisted_tensor_action(U, M, M)
    assert validate_module(MM).passed
    left = twisted_tensor_action(U, MM, M)
    right = twisted_tensor_action(U, M, MM)
    assert left.degrees == right.degrees
    assert left.left == right.left


def test_tensor_of_trivials_is_trivial(odd2):
    U = odd2.enveloping()
    K = trivial_module(odd2.lie, bimodule=False)
    T = twisted_tensor_action(U, K, K)
    assert T.left == K.left


def test_tensor_heis_z3_validates(heis_z3):
    U = heis_z3.enveloping()
    M = heis_z3.module("natural")
    assert validate_module(twisted_tensor_action(U, M, M)).passed


# -- F and G ------------------------------------------------------------------------------------

def test_g_of_f_on_regular_finite(odd1):
    U = odd1.enveloping()
    M = odd1.module("regular")
    back = bimodule_twist(bimodule_twist(FiniteBimoduleView(U, M), "F"), "G")
    assert bimodule_matrices(U, M, back).equals(M)


def test_g_of_f_on_regular_elements(odd1):
    U = odd1.enveloping()
    view = RegularBimoduleView(U)
    back = bimodule_twist(bimodule_twist(view, "F"), "G")
    for a in U.pbw_basis(2):
        for m in U.pbw_basis(2):
            ua, um = U.basis_element(a), U.basis_element(m)
            assert back.left(ua, um) == U.multiply(ua, um)
            assert back.right(um, ua) == U.multiply(um, ua)


def test_f_of_g_recovers_lusztig_module(heis3, heis3_U):
    U = heis3_U
    N = bimodule_twist(RegularBimoduleView(U), "F")
    NN = bimodule_twist(bimodule_twist(N, "G"), "F")
    monos = U.pbw_basis(2)
    for a in monos:
        for b in monos:
            t = TensorUElement.pure(U.basis_element(a), U.basis_element(b))
            for m in monos:
                v = U.basis_element(m)
                assert NN.act(t, v) == N.act(t, v)


def test_f_on_trivial_is_counit(heis3, heis3_U):
    U = heis3_U
    K = trivial_module(heis3.lie)
    F = bimodule_twist(FiniteBimoduleView(U, K), "F")
    one = {0: U.scalar(1)}
    for a in U.pbw_basis(2):
        for b in U.pbw_basis(2):
            t = TensorUElement.pure(U.basis_element(a), U.basis_element(b))
            expected = 1 if not a and not b else 0
            assert F.act(t, one) == ({0: U.scalar(1)} if expected else {})


def test_f_on_heis3_regular(heis3_U):
    U = heis3_U
    F = bimodule_twist(RegularBimoduleView(U), "F")
    assert F.act(TensorUElement.pure(U.gen("x"), U.one()), U.one()) == U.gen("x")


def test_g_requires_invertible_antipode(odd1):
    class Broken(EnvelopingAlgebra):
        def antipode(self, u):
            return u

    U = Broken(odd1.lie)
    with pytest.raises(ValueError, match="antipode"):
        bimodule_twist(bimodule_twist(RegularBimoduleView(U), "F"), "G")


def test_twist_bad_direction(odd1):
    with pytest.raises(ValueError):
        bimodule_twist(RegularBimoduleView(odd1.enveloping()), "H")
