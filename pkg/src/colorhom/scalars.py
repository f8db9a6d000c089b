"""Exact arithmetic in the cyclotomic field Q(zeta_N) and exact matrices over it.

A :class:`Scalar` stores the unique residue of a polynomial in ``w = zeta_N``
modulo the N-th cyclotomic polynomial, so equality is coefficient-wise.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

# coefficients are gmpy2 rationals; Fraction and int are accepted on input
Rational = type(mpq(0))
_NUMBER = (int, Fraction, Rational)


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, low degree first, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        lead = num[-1]
        q[shift] = lead
        for i, d in enumerate(den):
            num[shift + i] -= lead * d
        while num and num[-1] == 0:
            num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("root order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


class _Field:
    """Reduction tables for Q(zeta_n)."""

    def __init__(self, n: int):
        self.n = n
        phi = cyclotomic_polynomial(n)
        self.degree = d = len(phi) - 1
        # powers[k] = coefficients of w^k reduced mod Phi_n, for 0 <= k < max(n, 2d - 1)
        powers: list[tuple[Rational, ...]] = []
        cur = [mpq(0)] * d
        cur[0] = mpq(1)
        for _ in range(max(n, 2 * d - 1)):
            powers.append(tuple(cur))
            # multiply by w
            top = cur[-1]
            nxt = [mpq(0)] + cur[:-1]
            if top:
                for i in range(d):
                    nxt[i] -= top * phi[i]
            cur = nxt
        self.powers = powers
        zero = tuple(mpq(0) for _ in range(d))
        self.zero = Scalar._raw(n, zero)
        self.one = Scalar._raw(n, powers[0])

    def reduce(self, coeffs: Sequence[Rational]) -> tuple[Rational, ...]:
        d = self.degree
        if len(coeffs) <= d:
            return tuple(coeffs) + (mpq(0),) * (d - len(coeffs))
        out = list(coeffs[:d])
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                for i, p in enumerate(self._power(k)):
                    if p:
                        out[i] += c * p
        return tuple(out)

    def _power(self, k: int) -> tuple[Rational, ...]:
        k %= self.n
        return self.powers[k]


@lru_cache(maxsize=None)
def field(n: int) -> _Field:
    return _Field(n)


class Scalar:
    """Element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs: Iterable = (0,)):
        f = field(n)
        self.n = n
        self.c = f.reduce([mpq(x) for x in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, n: int, coeffs: tuple[Rational, ...]) -> Scalar:
        s = object.__new__(cls)
        s.n = n
        s.c = coeffs
        s._hash = None
        return s

    @classmethod
    def of(cls, n: int, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.n != n:
                raise ValueError(f"root order mismatch: {value.n} != {n}")
            return value
        f = field(n)
        v = mpq(value)
        return cls._raw(n, (v,) + f.zero.c[1:])

    @staticmethod
    def zero(n: int) -> Scalar:
        return field(n).zero

    @staticmethod
    def one(n: int) -> Scalar:
        return field(n).one

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.n != self.n:
                raise ValueError(f"root order mismatch: {self.n} != {other.n}")
            return other
        if isinstance(other, _NUMBER):
            return Scalar.of(self.n, other)
        return NotImplemented

    def __add__(self, other) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(self.n, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(self.n, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> Scalar:
        return Scalar._raw(self.n, tuple(-a for a in self.c))

    def __mul__(self, other) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if len(self.c) == 1:
            return Scalar._raw(self.n, (self.c[0] * o.c[0],))
        a, b = self.c, o.c
        prod = [mpq(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar._raw(self.n, field(self.n).reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("division by zero Scalar")
        d = len(self.c)
        if d == 1:
            return Scalar._raw(self.n, (1 / self.c[0],))
        # column j of the multiplication matrix is self * w^j
        f = field(self.n)
        cols = []
        col = self
        w = root_of_unity(self.n, 1)
        for _ in range(d):
            cols.append(col.c)
            col = col * w
        aug = [[cols[j][i] for j in range(d)] + [mpq(int(i == 0))] for i in range(d)]
        sol = _solve_square(aug, d)
        return Scalar._raw(self.n, f.reduce(sol))

    def __truediv__(self, other) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.n == other.n and self.c == other.c
        if isinstance(other, _NUMBER):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.c))
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __repr__(self) -> str:
        return f"Scalar({self.n}, {format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def _solve_square(aug: list[list[Rational]], d: int) -> list[Rational]:
    for col in range(d):
        piv = next(r for r in range(col, d) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][d] for i in range(d)]


def root_of_unity(n: int, k: int) -> Scalar:
    """zeta_n ** k in canonical form."""
    f = field(n)
    return Scalar._raw(n, f.powers[k % n])


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.n != b.n:
        raise ValueError(f"root order mismatch: {a.n} != {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# -- literal syntax -----------------------------------------------------------

_TERM = re.compile(
    r"(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?(?:(?(num)\*)(?P<w>w)(?:\^(?P<exp>\d+))?)?"
)


def parse_scalar(text: str, n: int) -> Scalar:
    """Parse ``"c0 + c1*w + c2*w^2"`` style literals; ``w`` is zeta_n."""
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("malformed scalar: empty literal")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Rational] = {}
    pos = 0
    while pos < len(s):
        sign = -1 if s[pos] == "-" else 1
        pos += 1
        end = pos
        while end < len(s) and s[end] not in "+-":
            end += 1
        body = s[pos:end]
        m = _TERM.fullmatch(body)
        if not body or m is None or (m.group("num") is None and m.group("w") is None):
            raise ValueError(f"malformed scalar: {text!r}")
        if m.group("den") is not None and int(m.group("den")) == 0:
            raise ValueError(f"malformed scalar: zero denominator in {text!r}")
        num = mpq(int(m.group("num")), int(m.group("den") or 1)) if m.group("num") else mpq(1)
        exp = 0
        if m.group("w"):
            exp = int(m.group("exp") or 1)
        coeffs[exp] = coeffs.get(exp, mpq(0)) + sign * num
        pos = end
    total = Scalar.zero(n)
    for exp, c in coeffs.items():
        total = total + root_of_unity(n, exp) * c
    return total


def format_scalar(s: Scalar) -> str:
    parts: list[str] = []
    for k, c in enumerate(s.c):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            wpart = "w" if k == 1 else f"w^{k}"
            body = wpart if mag == 1 else f"{mag}*{wpart}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


# -- matrices -----------------------------------------------------------------


class ExactMatrix:
    """Dense row-major matrix of Scalars sharing one root order."""

    __slots__ = ("rows", "cols", "entries", "n")

    def __init__(self, rows: int, cols: int, entries: Sequence[Scalar], n: int):
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows*cols")
        for e in entries:
            if e.n != n:
                raise ValueError("all entries must share the root order")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self.n = n

    @classmethod
    def zeros(cls, rows: int, cols: int, n: int) -> ExactMatrix:
        z = Scalar.zero(n)
        return cls(rows, cols, [z] * (rows * cols), n)

    @classmethod
    def identity(cls, size: int, n: int) -> ExactMatrix:
        return cls.from_sparse(size, size, {(i, i): Scalar.one(n) for i in range(size)}, n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n: int, cols: int | None = None) -> ExactMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
            flat.extend(Scalar.of(n, x) for x in r)
        return cls(len(rows), cols, flat, n)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, data: Mapping[tuple[int, int], Scalar], n: int) -> ExactMatrix:
        z = Scalar.zero(n)
        flat = [z] * (rows * cols)
        for (i, j), v in data.items():
            flat[i * cols + j] = v if isinstance(v, Scalar) else Scalar.of(n, v)
        return cls(rows, cols, flat, n)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> list[dict[int, Scalar]]:
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append({j: v for j, v in enumerate(r) if v})
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.n, self.entries) == (other.rows, other.cols, other.n, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.n, self.entries))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_shape(other)
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.n)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_shape(other)
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.n)

    def scale(self, s) -> ExactMatrix:
        s = Scalar.of(self.n, s)
        return ExactMatrix(self.rows, self.cols, [s * a for a in self.entries], self.n)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if self.n != other.n:
            raise ValueError("root order mismatch")
        right = other.sparse_rows()
        data: dict[tuple[int, int], Scalar] = {}
        for i, row in enumerate(self.sparse_rows()):
            acc: dict[int, Scalar] = {}
            for k, a in row.items():
                for j, b in right[k].items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            for j, v in acc.items():
                if v:
                    data[i, j] = v
        return ExactMatrix.from_sparse(self.rows, other.cols, data, self.n)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.n)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        out = []
        for i in range(self.rows):
            acc = Scalar.zero(self.n)
            for a, b in zip(self.row(i), vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def _check_shape(self, other: ExactMatrix) -> None:
        if (self.rows, self.cols, self.n) != (other.rows, other.cols, other.n):
            raise ValueError("shape or root order mismatch")

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, N={self.n})"


def _integer_rows(rows: list[dict[int, Scalar]]) -> list[dict[int, int]]:
    out = []
    for r in rows:
        if not r:
            continue
        den = 1
        for v in r.values():
            den = den * v.c[0].denominator // math.gcd(den, v.c[0].denominator)
        out.append({j: int(v.c[0] * den) for j, v in r.items()})
    return out


def _rank_integer(rows: list[dict[int, int]]) -> int:
    # incremental fraction-free echelon form keyed by leading column
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                g = 0
                for v in r.values():
                    g = math.gcd(g, v)
                if g > 1:
                    r = {j: v // g for j, v in r.items()}
                pivots[c] = r
                break
            a, b = p[c], r[c]
            new = {j: a * v for j, v in r.items()}
            for j, v in p.items():
                t = new.get(j, 0) - b * v
                if t:
                    new[j] = t
                else:
                    new.pop(j, None)
            g = 0
            for v in new.values():
                g = math.gcd(g, v)
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            r = new
    return len(pivots)


def _rank_field(rows: list[dict[int, Scalar]]) -> int:
    pivots: dict[int, dict[int, Scalar]] = {}
    for r in rows:
        r = dict(r)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = r[c].inverse()
                pivots[c] = {j: v * inv for j, v in r.items()}
                break
            f = r[c]
            for j, v in p.items():
                t = r[j] - f * v if j in r else -(f * v)
                if t:
                    r[j] = t
                else:
                    r.pop(j, None)
    return len(pivots)


def matrix_rank_kernel(m: ExactMatrix) -> tuple[int, int]:
    """(rank, kernel dimension) by exact elimination."""
    rows = [r for r in m.sparse_rows() if r]
    if not rows:
        return 0, m.cols
    if field(m.n).degree == 1:
        rank = _rank_integer(_integer_rows(rows))
    else:
        rank = _rank_field(rows)
    return rank, m.cols - rank


def rank_dense_column_pivot(m: ExactMatrix) -> int:
    """Gauss-Jordan over the field with pivots chosen column by column from the last row up.

    Independent of :func:`matrix_rank_kernel`; used as a cross-check.
    """
    a = m.to_rows()
    rank = 0
    for col in range(m.cols - 1, -1, -1):
        piv = None
        for r in range(m.rows - 1, rank - 1, -1):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = a[rank][col].inverse()
        a[rank] = [x * inv for x in a[rank]]
        for r in range(m.rows):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank
