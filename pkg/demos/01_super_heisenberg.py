"""Walk through U(L) for the super Heisenberg algebra: x, y odd, z even, [x, y] = z.

    python3 demos/01_super_heisenberg.py
"""

from colorhom import check_hopf_axioms, coproduct, homotopy_check, koszul_d, lie_cohomology_dims
from colorhom.ce_cohomology import KoszulChainElement, format_chain
from colorhom.fixtures import load_fixture
from colorhom.gmodules import trivial_module

spec = load_fixture("heis3")
L = spec.lie
U = spec.enveloping()
x, y, z = (U.gen(n) for n in "xyz")

print("Reordering a word: y.x ->", U.multiply(y, x))
print("Odd squares vanish: x.x ->", U.multiply(x, x))
print("Coproduct of x.y:", coproduct(U.multiply(x, y)))
print("Antipode of x.y:", U.antipode(U.multiply(x, y)))

rep = check_hopf_axioms(U, 3)
print(f"Hopf identities on monomials of length <= 3: {'all hold' if rep.passed else rep.failures()}")

# the Koszul differential on 1 (x) <x, y>, then once more
e = KoszulChainElement.basis(L, (), (0, 1))
d2 = koszul_d(L, 2, e)
print("d_2(1 (x) <x,y>) =", format_chain(L, d2))
print("d_1 of that      =", format_chain(L, koszul_d(L, 1, d2)) or "0")

rep = homotopy_check(L, 3)
print("Filtration homotopy dt + td = p Id for p <= 3:", "holds" if rep.passed else rep.failures())

print("\nH^n(L, K)_h for the trivial module:")
dims = lie_cohomology_dims(L, trivial_module(L, bimodule=False), 3)
for n in range(4):
    print(f"  n={n}:", {str(list(h)): dims[n, h] for h in L.group.elements()})
