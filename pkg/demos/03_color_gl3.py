"""gl(3) graded by Z2 x Z2 with a bicharacter that is not a super sign.

Rows of 3x3 matrices get degrees (0,0), (1,0), (0,1); the bracket is
AB - eps(|A|,|B|) BA.  Its cohomology with trivial coefficients looks like
that of ordinary gl(3) in low degrees.

    python3 demos/03_color_gl3.py
"""

import time

from colorhom import lie_cohomology_dims, validate_color_lie
from colorhom.fixtures import load_fixture
from colorhom.gmodules import trivial_module

spec = load_fixture("glcolor")
L = spec.lie
print("basis:", " ".join(f"{n}{list(d)}" for n, d in zip(L.names, L.degrees)))
print("color Lie axioms:", "pass" if validate_color_lie(L).passed else "FAIL")

t = time.perf_counter()
confl = spec.enveloping().check_confluence(3)
print(f"PBW rewriting confluent up to length 3: {confl.passed} ({time.perf_counter() - t:.2f}s)")

for m, M in (("trivial", trivial_module(L, bimodule=False)), ("natural", spec.module("natural"))):
    dims = lie_cohomology_dims(L, M, 3)
    print(f"H^n(L, {m}) summed over h:", [sum(v for (k, _), v in dims.items() if k == n) for n in range(4)])
