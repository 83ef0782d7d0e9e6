"""Finite Coxeter groups realized by their geometric representation.

Elements are exact matrices over a cyclotomic field (2 cos(pi/m) = zeta_2m +
zeta_2m^-1); equality of elements is equality of matrices.  Reduced words
are kept as certificates, in ShortLex normal form, and all element lists are
sorted ShortLex (by length, then lexicographically on generator indices).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce

from .cyclotomic import ONE, ZERO, CycNumber, cyc

SIZE_GUARD = 100_000

Matrix = tuple[tuple[CycNumber, ...], ...]


class CoxeterTypeError(ValueError):
    pass


_TYPE = re.compile(r"\s*([A-Za-z])\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*")


def coxeter_matrix(type_name: str) -> tuple[str, tuple[tuple[int, ...], ...], int]:
    """Parse a type such as ``A3``, ``B2``, ``G2``, ``H3`` or ``I2(5)``; returns (name, m, |W|)."""
    match = _TYPE.fullmatch(type_name)
    if not match:
        raise CoxeterTypeError(f"unknown Coxeter type {type_name!r}")
    letter, rank, param = match.group(1).upper(), int(match.group(2)), match.group(3)

    def chain(r, edges):
        m = [[1 if i == j else 2 for j in range(r)] for i in range(r)]
        for (i, j), val in edges.items():
            m[i][j] = m[j][i] = val
        return tuple(tuple(row) for row in m)

    if letter == "A" and param is None and rank >= 1:
        return f"A{rank}", chain(rank, {(i, i + 1): 3 for i in range(rank - 1)}), math.factorial(rank + 1)
    if letter == "B" and param is None and rank >= 2:
        edges = {(i, i + 1): 3 for i in range(rank - 2)}
        edges[(rank - 2, rank - 1)] = 4
        return f"B{rank}", chain(rank, edges), 2 ** rank * math.factorial(rank)
    if letter == "G" and rank == 2 and param is None:
        return "G2", chain(2, {(0, 1): 6}), 12
    if letter == "H" and rank == 3 and param is None:
        return "H3", chain(3, {(0, 1): 5, (1, 2): 3}), 120
    if letter == "I" and rank == 2 and param is not None:
        m = int(param)
        if not 2 <= m <= 8:
            raise CoxeterTypeError("I2(m) is supported for 2 <= m <= 8")
        return f"I2({m})", chain(2, {(0, 1): m}), 2 * m
    raise CoxeterTypeError(f"unsupported Coxeter type {type_name!r}")


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    cols = list(zip(*B))
    out = []
    for i in range(n):
        row = A[i]
        out.append(tuple(_dot(row, col) for col in cols))
    return tuple(out)


def _dot(row, col) -> CycNumber:
    acc = ZERO
    for a, b in zip(row, col):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


@dataclass
class CoxeterGroup:
    name: str
    m: tuple[tuple[int, ...], ...]
    conductor: int
    generators: tuple[Matrix, ...]
    matrices: list[Matrix]
    words: list[tuple[int, ...]]
    length: list[int]
    lmul: list[list[int]]  # lmul[s][w] = index of s w
    rmul: list[list[int]]  # rmul[s][w] = index of w s
    inverse: list[int]

    @property
    def rank(self) -> int:
        return len(self.m)

    @property
    def order(self) -> int:
        return len(self.words)

    @property
    def identity(self) -> int:
        return 0

    @property
    def longest(self) -> int:
        return self.order - 1

    def left_descents(self, w: int) -> list[int]:
        return [s for s in range(self.rank) if self.length[self.lmul[s][w]] < self.length[w]]

    def right_descents(self, w: int) -> list[int]:
        return [s for s in range(self.rank) if self.length[self.rmul[s][w]] < self.length[w]]

    def word_str(self, w: int) -> str:
        return " ".join(f"s{i + 1}" for i in self.words[w]) or "e"

    def parse_word(self, text: str) -> int:
        tokens = text.replace(",", " ").split()
        w = self.identity
        for tok in reversed(tokens):
            if tok == "e":
                continue
            m = re.fullmatch(r"s(\d+)", tok)
            if not m or not 1 <= int(m.group(1)) <= self.rank:
                raise CoxeterTypeError(f"bad generator {tok!r} for rank {self.rank}")
            w = self.lmul[int(m.group(1)) - 1][w]
        return w

    def multiply(self, x: int, y: int) -> int:
        w = y
        for s in reversed(self.words[x]):
            w = self.lmul[s][w]
        return w

    def is_involution(self, w: int) -> bool:
        return self.inverse[w] == w

    def check_relations(self) -> bool:
        n = self.rank
        eye = self.matrices[0]
        for i in range(n):
            for j in range(n):
                prod = _matmul(self.generators[i], self.generators[j])
                power = reduce(lambda acc, _: _matmul(acc, prod), range(self.m[i][j]), eye)
                if power != eye:
                    return False
        return True


def _key(M: Matrix, N: int) -> tuple:
    return tuple(x.key_at(N) for row in M for x in row)


def build_group(type_name: str, size_guard: int = SIZE_GUARD) -> CoxeterGroup:
    name, m, expected = coxeter_matrix(type_name)
    if expected > size_guard:
        raise CoxeterTypeError(f"|W({name})| = {expected} exceeds the size guard {size_guard}")
    n = len(m)
    N = 1
    for row in m:
        for v in row:
            N = math.lcm(N, 2 * v)

    def two_b(i, j):  # 2 B(alpha_i, alpha_j)
        if i == j:
            return CycNumber.coerce(2)
        if m[i][j] == 2:
            return ZERO
        z = cyc(2 * m[i][j], 1)
        return -(z + z.inv())

    gens = []
    for s in range(n):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                val = ONE if i == j else ZERO
                if i == s:
                    val = val - two_b(s, j)
                row.append(val.lift(N) if val.conductor != N else val)
            rows.append(tuple(row))
        gens.append(tuple(rows))
    eye = tuple(tuple((ONE if i == j else ZERO).lift(N) for j in range(n)) for i in range(n))

    mats = [eye]
    index = {_key(eye, N): 0}
    length = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            for s in range(n):
                M = _matmul(gens[s], mats[w])
                k = _key(M, N)
                if k not in index:
                    index[k] = len(mats)
                    mats.append(M)
                    length.append(length[w] + 1)
                    nxt.append(index[k])
                    if len(mats) > size_guard:
                        raise CoxeterTypeError("size guard exceeded during enumeration")
        frontier = nxt
    if len(mats) != expected:
        raise AssertionError(f"enumerated {len(mats)} elements, expected {expected}")
    size = len(mats)
    lmul = [[index[_key(_matmul(gens[s], mats[w]), N)] for w in range(size)] for s in range(n)]
    rmul = [[index[_key(_matmul(mats[w], gens[s]), N)] for w in range(size)] for s in range(n)]
    # ShortLex words: least left descent, then the normal form of the shorter element
    order = sorted(range(size), key=lambda w: length[w])
    words: list[tuple[int, ...] | None] = [None] * size
    words[0] = ()
    for w in order[1:]:
        s = min(t for t in range(n) if length[lmul[t][w]] < length[w])
        words[w] = (s,) + words[lmul[s][w]]
    perm = sorted(range(size), key=lambda w: (length[w], words[w]))
    pos = {old: new for new, old in enumerate(perm)}
    W = CoxeterGroup(
        name=name, m=m, conductor=N, generators=tuple(gens),
        matrices=[mats[o] for o in perm],
        words=[words[o] for o in perm],
        length=[length[o] for o in perm],
        lmul=[[pos[lmul[s][o]] for o in perm] for s in range(n)],
        rmul=[[pos[rmul[s][o]] for o in perm] for s in range(n)],
        inverse=[0] * size,
    )
    for w in range(size):
        x = 0
        for s in W.words[w]:
            x = W.lmul[s][x]
        W.inverse[w] = x
    if not W.check_relations():
        raise AssertionError(f"Coxeter relations fail for {name}")
    return W
