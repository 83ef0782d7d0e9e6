"""Normalized 3-cocycles on cyclic groups Z/n and their gauge (coboundary) action."""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Mapping

from .cyclotomic import ONE, CycNumber, cyc, order_lcm, root_of_unity_exponent
from .linmod import LinearSystem

Triple = tuple[int, int, int]


class CocycleError(ValueError):
    pass


@dataclass(frozen=True)
class Cocycle3:
    """A table omega(a, b, c) for a, b, c in Z/n, indexed a*n*n + b*n + c."""

    n: int
    values: tuple[CycNumber, ...]

    def __post_init__(self):
        if self.n < 1:
            raise CocycleError(f"group order must be positive, got {self.n}")
        if len(self.values) != self.n ** 3:
            raise CocycleError(f"expected {self.n ** 3} values, got {len(self.values)}")

    def __call__(self, a: int, b: int, c: int) -> CycNumber:
        n = self.n
        return self.values[(a % n) * n * n + (b % n) * n + (c % n)]

    @classmethod
    def from_function(cls, n: int, fn) -> Cocycle3:
        return cls(n, tuple(CycNumber.coerce(fn(a, b, c))
                            for a, b, c in itertools.product(range(n), repeat=3)))

    @classmethod
    def trivial(cls, n: int) -> Cocycle3:
        return cls(n, (ONE,) * n ** 3)

    def is_normalized(self) -> bool:
        n = self.n
        return all(self(a, b, c) == 1 for a, b, c in itertools.product(range(n), repeat=3)
                   if 0 in (a, b, c))

    def __mul__(self, other: Cocycle3) -> Cocycle3:
        if self.n != other.n:
            raise CocycleError("cocycles on different groups")
        return Cocycle3(self.n, tuple(x * y for x, y in zip(self.values, other.values)))

    def with_value(self, triple: Triple, value) -> Cocycle3:
        """Copy with one entry replaced; no validation (used to build corrupted inputs)."""
        n = self.n
        vals = list(self.values)
        a, b, c = triple
        vals[a * n * n + b * n + c] = CycNumber.coerce(value)
        return Cocycle3(n, tuple(vals))

    def exponent_bound(self) -> int:
        return order_lcm(self.values)

    # file format -----------------------------------------------------------
    def to_json(self) -> dict:
        omega = {}
        for a, b, c in itertools.product(range(self.n), repeat=3):
            v = self(a, b, c)
            if v != 1:
                omega[f"({a},{b},{c})"] = v.to_json()
        return {"n": self.n, "omega": omega}

    @classmethod
    def from_json(cls, obj: Mapping) -> Cocycle3:
        try:
            n = int(obj["n"])
            entries = obj.get("omega", {})
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CocycleError(f"malformed cocycle file: {exc}") from exc
        table = {}
        for key, val in entries.items():
            m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", key)
            if not m:
                raise CocycleError(f"malformed cocycle key {key!r}")
            a, b, c = (int(t) for t in m.groups())
            if max(a, b, c) >= n:
                raise CocycleError(f"key {key!r} out of range for n={n}")
            table[(a, b, c)] = CycNumber.from_json(val)
        return cls.from_function(n, lambda a, b, c: table.get((a, b, c), ONE))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class Gauge2:
    """A normalized 2-cochain g(a, b) on Z/n."""

    n: int
    values: tuple[CycNumber, ...]

    def __call__(self, a: int, b: int) -> CycNumber:
        n = self.n
        return self.values[(a % n) * n + (b % n)]

    @classmethod
    def from_function(cls, n: int, fn) -> Gauge2:
        vals = []
        for a, b in itertools.product(range(n), repeat=2):
            vals.append(ONE if 0 in (a, b) else CycNumber.coerce(fn(a, b)))
        return cls(n, tuple(vals))

    @classmethod
    def identity(cls, n: int) -> Gauge2:
        return cls(n, (ONE,) * n * n)

    def inverse(self) -> Gauge2:
        return Gauge2(self.n, tuple(v.inv() for v in self.values))

    def __mul__(self, other: Gauge2) -> Gauge2:
        return Gauge2(self.n, tuple(x * y for x, y in zip(self.values, other.values)))


def cocycle_violations(w: Cocycle3) -> list[tuple[int, int, int, int]]:
    n = w.n
    bad = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        lhs = w(b, c, d) * w(a, b + c, d) * w(a, b, c)
        rhs = w(a + b, c, d) * w(a, b, c + d)
        if lhs != rhs:
            bad.append((a, b, c, d))
    return bad


def is_cocycle(w: Cocycle3) -> tuple[bool, list[tuple[int, int, int, int]]]:
    """Exhaustive check of the 3-cocycle condition over all n^4 quadruples."""
    bad = cocycle_violations(w)
    return not bad, bad


def standard_cocycle(n: int, p: int) -> Cocycle3:
    """omega_p(a, b, c) = zeta_n^(p * a * floor((b + c) / n))."""
    if n < 1 or not 0 <= p < n:
        raise CocycleError(f"need n >= 1 and 0 <= p < n, got n={n}, p={p}")
    w = Cocycle3.from_function(n, lambda a, b, c: cyc(n, p * a * ((b + c) // n)))
    ok, bad = is_cocycle(w)
    if not ok:
        raise AssertionError(f"standard cocycle ({n},{p}) fails at {bad[0]}")
    return w


def apply_coboundary(w: Cocycle3, g: Gauge2) -> Cocycle3:
    """omega'(a,b,c) = omega(a,b,c) g(b,c) g(a,b+c) / (g(a,b) g(a+b,c))."""
    if w.n != g.n:
        raise CocycleError("cocycle and gauge live on different groups")
    out = Cocycle3.from_function(
        w.n, lambda a, b, c: w(a, b, c) * g(b, c) * g(a, b + c) / (g(a, b) * g(a + b, c)))
    if is_cocycle(w)[0] and not is_cocycle(out)[0]:
        raise AssertionError("coboundary action broke the cocycle condition")
    return out


def cohomologous(w1: Cocycle3, w2: Cocycle3, root_bound: int = 8) -> Gauge2 | None:
    """A normalized gauge with values in mu_root_bound carrying w1 to w2, or None.

    The search is exact over all of mu_root_bound: the gauge equations are
    linear in the exponents, so they are solved as congruences mod root_bound.
    """
    if root_bound < 1:
        raise CocycleError(f"root_bound must be >= 1, got {root_bound}")
    if w1.n != w2.n:
        raise CocycleError("cocycles on different groups")
    n = w1.n
    L = root_bound
    system = LinearSystem()
    for a in range(1, n):
        for b in range(1, n):
            system.var((a, b))
    for a, b, c in itertools.product(range(n), repeat=3):
        k = root_of_unity_exponent(w2(a, b, c) / w1(a, b, c), L)
        if k is None:
            return None
        terms: dict = {}
        for key, sign in (((b, c), 1), ((a, (b + c) % n), 1), ((a, b), -1), (((a + b) % n, c), -1)):
            if 0 in key:
                continue
            terms[key] = terms.get(key, 0) + sign
        terms = {key: s for key, s in terms.items() if s}
        if not terms:
            if k % L:
                return None
            continue
        system.add(terms, k)
    sol = system.solve(L)
    if sol is None:
        return None
    g = Gauge2.from_function(n, lambda a, b: cyc(L, sol[(a, b)]))
    assert apply_coboundary(w1, g) == w2
    return g


def random_gauge(n: int, rng, root_bound: int = 8) -> Gauge2:
    return Gauge2.from_function(n, lambda a, b: cyc(root_bound, rng.randrange(root_bound)))
