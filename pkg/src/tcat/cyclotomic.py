"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycNumber` stores an element of Q(zeta_N) in the power basis
``1, z, ..., z^(phi(N)-1)`` reduced modulo the N-th cyclotomic polynomial.
Coefficients are kept as integer numerators over one positive common
denominator, so there is no floating point anywhere.

Operands with different conductors are lifted to the lcm of the two
conductors before any arithmetic; equality and hashing are independent of
the conductor a value happens to be stored in.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Scalar = Union["CycNumber", int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 = prod_{d | n} Phi_d(x)
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % lead == 0
        c //= lead
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num[: len(den) - 1])
    return q


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer polynomial modulo Phi_n (monic)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = coeffs[:]
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            base = i - deg
            for j in range(deg):
                coeffs[base + j] -= c * phi[j]
            coeffs[i] = 0
    out = coeffs[:deg]
    out.extend([0] * (deg - len(out)))
    return out


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of zeta_n^k for k = 0..n-1."""
    deg = euler_phi(n)
    rows = []
    for k in range(n):
        v = [0] * max(deg, k + 1)
        v[k] = 1
        rows.append(tuple(_reduce(v, n)))
    return tuple(rows)


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if math.gcd(k, n) == 1)


class CycNumber:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("_n", "_num", "_den", "_canon")

    def __init__(self, n: int, coeffs: Iterable, _den: int | None = None):
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        if _den is None:
            fr = [Fraction(c) for c in coeffs]
            den = 1
            for c in fr:
                den = _lcm(den, c.denominator)
            ints = [int(c * den) for c in fr]
        else:
            ints, den = list(coeffs), _den
        deg = euler_phi(n)
        if len(ints) != deg:
            ints = _reduce(ints + [0] * max(0, deg - len(ints)), n)
        g = den
        for c in ints:
            g = math.gcd(g, c)
        if g > 1:
            ints = [c // g for c in ints]
            den //= g
        self._n = n
        self._num = tuple(ints)
        self._den = den
        self._canon = None

    # construction -------------------------------------------------------
    @classmethod
    def coerce(cls, x: Scalar) -> CycNumber:
        if isinstance(x, CycNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(1, [x])
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNumber")

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def lift(self, n: int) -> CycNumber:
        """The same value written in Q(zeta_n); requires conductor | n."""
        if n == self._n:
            return self
        if n % self._n:
            raise ValueError(f"cannot lift conductor {self._n} to {n}")
        step = n // self._n
        table = _power_table(n)
        out = [0] * euler_phi(n)
        for i, c in enumerate(self._num):
            if c:
                row = table[(i * step) % n]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycNumber(n, out, self._den)

    def key_at(self, n: int) -> tuple:
        """Hashable exact coordinates in the power basis of Q(zeta_n)."""
        x = self.lift(n)
        return (x._num, x._den)

    def _pair(self, other: Scalar) -> tuple[CycNumber, CycNumber]:
        other = CycNumber.coerce(other)
        n = _lcm(self._n, other._n)
        return self.lift(n), other.lift(n)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        if a._den == b._den:
            return CycNumber(a._n, [x + y for x, y in zip(a._num, b._num)], a._den)
        den = _lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycNumber(a._n, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self._n, [-c for c in self._num], self._den)

    def __sub__(self, other):
        try:
            return self + (-CycNumber.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        if a._n == 1:
            return CycNumber(1, [a._num[0] * b._num[0]], a._den * b._den)
        prod = [0] * (len(a._num) + len(b._num) - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        prod[i + j] += x * y
        return CycNumber(a._n, _reduce(prod, a._n), a._den * b._den)

    __rmul__ = __mul__

    def galois(self, k: int) -> CycNumber:
        """Apply the automorphism zeta_N -> zeta_N^k (gcd(k, N) = 1)."""
        n = self._n
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        table = _power_table(n)
        out = [0] * euler_phi(n)
        for i, c in enumerate(self._num):
            if c:
                for j, r in enumerate(table[(i * k) % n]):
                    out[j] += c * r
        return CycNumber(n, out, self._den)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        p = CycNumber(1, [1])
        for k in _units(self._n):
            p = p * self.galois(k)
        return p.coeffs[0]

    def inv(self) -> CycNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # x^-1 = (prod of the other conjugates) / N(x)
        rest = CycNumber(1, [1])
        for k in _units(self._n):
            if k % self._n != 1 % self._n:
                rest = rest * self.galois(k)
        nrm = (rest * self).lift(self._n)
        assert not any(nrm._num[1:])
        return rest * CycNumber(1, [Fraction(nrm._den, nrm._num[0])])

    def __truediv__(self, other):
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return CycNumber.coerce(other) * self.inv()

    def __pow__(self, k: int) -> CycNumber:
        if k < 0:
            return self.inv() ** (-k)
        result = CycNumber(self._n, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a._num == b._num and a._den == b._den

    def canonical(self) -> CycNumber:
        """The same value stored at its minimal conductor."""
        if self._canon is None:
            self._canon = self._minimal()
        return self._canon

    def _minimal(self) -> CycNumber:
        n = self._n
        for m in _divisors(n):
            if m % 4 == 2 or m == n:
                continue
            fixing = [k for k in _units(n) if k % m == 1 % m]
            if all(self.galois(k) == self for k in fixing):
                return _descend(self, m)
        return self

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c._n, c._num, c._den))

    def is_rational(self) -> bool:
        return self.canonical()._n == 1

    def to_fraction(self) -> Fraction:
        c = self.canonical()
        if c._n != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(c._num[0], c._den)

    # roots of unity ----------------------------------------------------
    def multiplicative_order(self) -> int | float:
        """Least k >= 1 with x^k = 1, or ``math.inf`` if x is not a root of unity."""
        if self.is_zero():
            raise ValueError("multiplicative order of zero")
        bound = _lcm(2, self._n)
        x = self
        for k in range(1, bound + 1):
            if x == 1:
                return k
            x = x * self
        return math.inf

    def root_exponent(self) -> Fraction | None:
        """The fraction q in [0, 1) with x = exp(2 pi i q), or None."""
        if self.is_zero():
            return None
        m = self.multiplicative_order()
        if m == math.inf:
            return None
        for j in range(m):
            if math.gcd(j, m) == 1 or m == 1:
                if cyc(m, j) == self:
                    return Fraction(j, m)
        raise AssertionError("unreachable: order computed but exponent not found")

    # formatting --------------------------------------------------------
    def __repr__(self) -> str:
        return f"CycNumber({self._n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        q = self.root_exponent() if self.is_unit_root_candidate() else None
        if q is not None:
            m, j = q.denominator, q.numerator
            if m == 1:
                return "1"
            if m == 2:
                return "-1"
            if m == 4:
                return "i" if j == 1 else "-i"
            return f"zeta{m}" if j == 1 else f"zeta{m}^{j}"
        c = self.canonical()
        if c._n == 1:
            return str(c.coeffs[0])
        terms = []
        for i, coef in enumerate(c.coeffs):
            if coef:
                mono = "1" if i == 0 else (f"zeta{c._n}" if i == 1 else f"zeta{c._n}^{i}")
                terms.append(f"({coef})*{mono}")
        return " + ".join(terms)

    def is_unit_root_candidate(self) -> bool:
        # roots of unity have norm +-1; cheap filter before the order search
        return not self.is_zero() and abs(self.norm()) == 1

    # serialization -------------------------------------------------------
    def to_json(self) -> dict:
        c = self.canonical()
        return {"N": c._n, "coeffs": [str(x) for x in c.coeffs]}

    @classmethod
    def from_json(cls, obj) -> CycNumber:
        if isinstance(obj, (int, str)):
            return cls(1, [Fraction(obj)])
        try:
            return cls(int(obj["N"]), [Fraction(c) for c in obj["coeffs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed cyclotomic number {obj!r}") from exc


def _descend(x: CycNumber, m: int) -> CycNumber:
    """Write x, known to lie in Q(zeta_m), in the power basis of Q(zeta_m)."""
    n = x.conductor
    dm = euler_phi(m)
    step = n // m
    table = _power_table(n)
    # columns: images of 1, zeta_m, ..., zeta_m^(dm-1) inside Q(zeta_n)
    cols = [table[(i * step) % n] for i in range(dm)]
    rows = len(cols[0])
    target = x.coeffs
    aug = [[Fraction(cols[j][r]) for j in range(dm)] + [target[r]] for r in range(rows)]
    sol = _solve_exact(aug, dm)
    return CycNumber(m, sol)


def _solve_exact(aug: list[list[Fraction]], nvars: int) -> list[Fraction]:
    rows = len(aug)
    piv_cols = []
    r = 0
    for c in range(nvars):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1]
    return sol


@lru_cache(maxsize=4096)
def cyc(n: int, k: int = 1) -> CycNumber:
    """zeta_n^k in canonical reduced form."""
    if n < 1:
        raise ValueError(f"cyc requires N >= 1, got {n}")
    return CycNumber(n, _power_table(n)[k % n])


ONE = cyc(1, 0)
ZERO = CycNumber(1, [0])


def root_of_unity_exponent(x: CycNumber, bound: int) -> int | None:
    """k in [0, bound) with x = zeta_bound^k, or None if x is not in mu_bound."""
    q = x.root_exponent() if not x.is_zero() else None
    if q is None or bound % q.denominator:
        return None
    return q.numerator * (bound // q.denominator)


def multiplicative_order(x: Scalar) -> int | float:
    return CycNumber.coerce(x).multiplicative_order()


def order_lcm(values: Iterable[CycNumber]) -> int:
    """lcm of the orders of a family of roots of unity."""
    out = 1
    for v in values:
        m = v.multiplicative_order()
        if m == math.inf:
            raise ValueError(f"{v} is not a root of unity")
        out = _lcm(out, m)
    return out
