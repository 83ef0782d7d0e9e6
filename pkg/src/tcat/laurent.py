"""Laurent polynomials in one variable v with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping


class Laurent:
    """Immutable sparse Laurent polynomial; ``terms`` maps exponent -> nonzero integer."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Laurent:
        return cls({k: c})

    @classmethod
    def const(cls, c: int) -> Laurent:
        return cls({0: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Laurent) -> Laurent:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent(out)

    def __sub__(self, other: Laurent) -> Laurent:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return Laurent(out)

    def __neg__(self) -> Laurent:
        return Laurent({k: -c for k, c in self.terms.items()})

    def __mul__(self, other) -> Laurent:
        if isinstance(other, int):
            return Laurent({k: c * other for k, c in self.terms.items()})
        out: dict[int, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> Laurent:
        return Laurent({e + k: c for e, c in self.terms.items()})

    def bar(self) -> Laurent:
        """v -> v^-1."""
        return Laurent({-k: c for k, c in self.terms.items()})

    def coeff(self, k: int) -> int:
        return self.terms.get(k, 0)

    def degree(self) -> int | None:
        return max(self.terms) if self.terms else None

    def low_degree(self) -> int | None:
        return min(self.terms) if self.terms else None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Laurent({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


V = Laurent.monomial(1)
VINV = Laurent.monomial(-1)
ZERO = Laurent()
ONE = Laurent.const(1)


def laurent_sum(items: Iterable[Laurent]) -> Laurent:
    out: dict[int, int] = {}
    for p in items:
        for k, c in p.terms.items():
            out[k] = out.get(k, 0) + c
    return Laurent(out)


def q_polynomial_from_p(p: Laurent, length_gap: int) -> list[int]:
    """Coefficients of P(q) where p = v^(-length_gap) P(v^2)."""
    shifted = p.shift(length_gap)
    if not shifted.terms:
        return []
    if any(k % 2 or k < 0 for k in shifted.terms):
        raise ValueError(f"{p} is not of the form v^-{length_gap} P(v^2)")
    top = max(shifted.terms) // 2
    return [shifted.coeff(2 * i) for i in range(top + 1)]
