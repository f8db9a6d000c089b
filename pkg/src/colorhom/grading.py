"""Finitely generated abelian grading groups and root-of-unity bicharacters."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from colorhom.reports import ValidationReport
from colorhom.scalars import Scalar, root_of_unity

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Product of cyclic groups; an order of 0 denotes an infinite cyclic factor."""

    orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))
        if any(m < 0 for m in self.orders):
            raise ValueError("factor orders must be non-negative")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def is_finite(self) -> bool:
        return all(m > 0 for m in self.orders)

    @property
    def size(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for m in self.orders:
            out *= m
        return out

    def element(self, exps: Sequence[int]) -> GroupElement:
        if len(exps) != len(self.orders):
            raise ValueError(f"group element {list(exps)} has {len(exps)} exponents, group has {len(self.orders)} factors")
        return tuple(int(e) % m if m else int(e) for e, m in zip(exps, self.orders))

    def identity(self) -> GroupElement:
        return (0,) * len(self.orders)

    def compose(self, g: GroupElement, h: GroupElement) -> GroupElement:
        if len(g) != len(self.orders) or len(h) != len(self.orders):
            raise ValueError("dimension mismatch")
        return tuple((a + b) % m if m else a + b for a, b, m in zip(g, h, self.orders))

    def inverse(self, g: GroupElement) -> GroupElement:
        if len(g) != len(self.orders):
            raise ValueError("dimension mismatch")
        return tuple((-a) % m if m else -a for a, m in zip(g, self.orders))

    def product(self, gs: Sequence[GroupElement]) -> GroupElement:
        out = self.identity()
        for g in gs:
            out = self.compose(out, g)
        return out

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite group, lexicographic on exponent vectors."""
        if not self.is_finite:
            raise ValueError("group is infinite")
        return itertools.product(*(range(m) for m in self.orders))

    def generators(self) -> list[GroupElement]:
        out = []
        for i in range(len(self.orders)):
            g = [0] * len(self.orders)
            g[i] = 1
            out.append(self.element(g))
        return out


def group_op(spec: GroupSpec, g: GroupElement | None = None, h: GroupElement | None = None,
             op: str = "compose") -> GroupElement:
    if op == "compose":
        return spec.compose(spec.element(g), spec.element(h))
    if op == "inverse":
        return spec.inverse(spec.element(g))
    if op == "identity":
        return spec.identity()
    raise ValueError(f"unknown group op {op!r}")


@dataclass(frozen=True)
class Bicharacter:
    """chi(g_i, g_j) = zeta_N ** E[i][j] on generators, extended biadditively."""

    group: GroupSpec
    root_order: int
    exponents: tuple[tuple[int, ...], ...]
    antisymmetric: bool = True
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        exps = tuple(tuple(int(x) for x in row) for row in self.exponents)
        object.__setattr__(self, "exponents", exps)
        r = self.group.rank
        if len(exps) != r or any(len(row) != r for row in exps):
            raise ValueError(f"exponent matrix must be {r}x{r}")
        if self.root_order < 1:
            raise ValueError("root order must be positive")

    @classmethod
    def trivial(cls, group: GroupSpec, root_order: int = 1) -> Bicharacter:
        r = group.rank
        return cls(group, root_order, tuple((0,) * r for _ in range(r)))

    @classmethod
    def super_z2(cls) -> Bicharacter:
        return cls(GroupSpec((2,)), 2, ((1,),))

    def exponent(self, g: GroupElement, h: GroupElement) -> int:
        E = self.exponents
        total = 0
        for i, gi in enumerate(g):
            if gi:
                row = E[i]
                for j, hj in enumerate(h):
                    if hj:
                        total += gi * row[j] * hj
        return total % self.root_order

    def __call__(self, g: GroupElement, h: GroupElement) -> Scalar:
        key = (g, h)
        v = self._cache.get(key)
        if v is None:
            v = root_of_unity(self.root_order, self.exponent(g, h))
            self._cache[key] = v
        return v

    def inv(self, g: GroupElement, h: GroupElement) -> Scalar:
        """chi(g, h) ** -1."""
        return root_of_unity(self.root_order, -self.exponent(g, h))

    def parity(self, g: GroupElement) -> int:
        """epsilon(g, g) as +1 or -1; raises if it is not a sign."""
        v = self(g, g)
        if v == 1:
            return 1
        if v == -1:
            return -1
        raise ValueError(f"chi({g},{g}) = {v} is not a sign")

    def one(self) -> Scalar:
        return Scalar.one(self.root_order)


def chi_eval(chi: Bicharacter, g: GroupElement, h: GroupElement) -> Scalar:
    return chi(chi.group.element(g), chi.group.element(h))


def _sample_elements(group: GroupSpec, rng: random.Random, count: int) -> list[GroupElement]:
    out = []
    for _ in range(count):
        out.append(group.element([rng.randrange(m) if m else rng.randrange(-5, 6) for m in group.orders]))
    return out


def validate_bicharacter(chi: Bicharacter, samples: int = 200, seed: int = 0) -> ValidationReport:
    """Antisymmetry, bilinearity and well-definedness checks, with generator parities."""
    rep = ValidationReport("bicharacter")
    G, N, E = chi.group, chi.root_order, chi.exponents
    r = G.rank

    wd_bad = []
    for i in range(r):
        for j in range(r):
            mi, mj = G.orders[i], G.orders[j]
            if (mi and (mi * E[i][j]) % N) or (mj and (mj * E[i][j]) % N):
                wd_bad.append((i, j))
    rep.add("well_definedness", not wd_bad,
            f"exponent entries {wd_bad} not killed by the factor orders mod N={N}")

    gens = G.generators()
    if chi.antisymmetric:
        bad = [(a, b) for a in gens for b in gens if chi(a, b) * chi(b, a) != 1]
        rep.add("antisymmetry", not bad,
                f"chi(g,h)chi(h,g) != 1 for generator pairs {bad[:3]}")

    # biadditivity on reduced elements; exhaustive when small, sampled otherwise
    if G.is_finite and G.size ** 3 <= 4096:
        triples = list(itertools.product(list(G.elements()), repeat=3))
    else:
        rng = random.Random(seed)
        elts = _sample_elements(G, rng, 3 * samples)
        triples = [tuple(elts[3 * k:3 * k + 3]) for k in range(samples)]
    left_bad = right_bad = None
    for g, h, k in triples:
        if left_bad is None and chi(g, G.compose(h, k)) != chi(g, h) * chi(g, k):
            left_bad = (g, h, k)
        if right_bad is None and chi(G.compose(g, h), k) != chi(g, k) * chi(h, k):
            right_bad = (g, h, k)
    rep.add("bilinearity_right_slot", left_bad is None, f"chi(g,hk) != chi(g,h)chi(g,k) at {left_bad}")
    rep.add("bilinearity_left_slot", right_bad is None, f"chi(gh,k) != chi(g,k)chi(h,k) at {right_bad}")

    parities = {}
    for g in gens:
        v = chi(g, g)
        parities[str(list(g))] = 1 if v == 1 else (-1 if v == -1 else str(v))
    rep.info["parity"] = parities
    if chi.antisymmetric:
        bad = [g for g in gens if chi(g, g) * chi(g, g) != 1]
        rep.add("parity_is_sign", not bad, f"chi(g,g)^2 != 1 for {bad}")
    return rep
