"""Linear congruences A x = b (mod L) over the integers.

Every bounded root-of-unity search in the package reduces to such a system:
writing each unknown as zeta_L^x turns products of unknowns into sums of
exponents.  The solver diagonalizes A by unimodular row and column moves
(U A V = D), which gives the full solution set mod L exactly, so a search
over all of mu_L^k never has to be enumerated.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Diagonalization:
    """U A V = D with U, V unimodular; ``diag`` is the diagonal of D."""

    rows: int
    cols: int
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    diag: tuple[int, ...]


def diagonalize(A: Sequence[Sequence[int]], cols: int | None = None) -> Diagonalization:
    m = len(A)
    n = cols if cols is not None else (len(A[0]) if A else 0)
    D = [list(r) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = D[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                return _finish(m, n, U, V, D)
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = D[t][t]
            clean = True
            rt, ut = D[t], U[t]
            for i in range(t + 1, m):
                v = D[i][t]
                if v:
                    q = v // p
                    ri, ui = D[i], U[i]
                    for j in range(t, n):
                        if rt[j]:
                            ri[j] -= q * rt[j]
                    for j in range(m):
                        if ut[j]:
                            ui[j] -= q * ut[j]
                    if ri[t]:
                        clean = False
            for j in range(t + 1, n):
                v = rt[j]
                if v:
                    q = v // p
                    for i in range(t, m):
                        if D[i][t]:
                            D[i][j] -= q * D[i][t]
                    for row in V:
                        if row[t]:
                            row[j] -= q * row[t]
                    if rt[j]:
                        clean = False
            if clean:
                break
    return _finish(m, n, U, V, D)


def _finish(m, n, U, V, D) -> Diagonalization:
    diag = tuple(D[i][i] for i in range(min(m, n)))
    return Diagonalization(m, n, tuple(map(tuple, U)), tuple(map(tuple, V)), diag)


def _diag_at(d: Diagonalization, i: int) -> int:
    return d.diag[i] if i < len(d.diag) else 0


def solve_mod(A: Sequence[Sequence[int]], b: Sequence[int], L: int,
              cols: int | None = None, dz: Diagonalization | None = None) -> list[int] | None:
    """One solution of A x = b (mod L), or None when the system is inconsistent."""
    dz = dz or diagonalize(A, cols)
    m, n = dz.rows, dz.cols
    c = [sum(u * bi for u, bi in zip(dz.U[i], b)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = _diag_at(dz, i) if i < n else 0
        if d == 0:
            if c[i] % L:
                return None
            continue
        g = math.gcd(d, L)
        if c[i] % g:
            return None
        Lg = L // g
        y[i] = (c[i] // g) * pow(d // g, -1, Lg) % Lg if Lg > 1 else 0
    return [sum(v * yj for v, yj in zip(dz.V[r], y)) % L for r in range(n)]


def kernel_orders(dz: Diagonalization, L: int) -> list[tuple[int, list[int]]]:
    """Generators of the homogeneous solution group mod L with their orders."""
    gens = []
    for i in range(dz.cols):
        d = _diag_at(dz, i) if i < dz.rows else 0
        g = math.gcd(d, L)
        if g == 1:
            continue
        step = L // g
        vec = [(dz.V[r][i] * step) % L for r in range(dz.cols)]
        gens.append((g, vec))
    return gens


def count_homogeneous(dz: Diagonalization, L: int) -> int:
    """Number of x mod L with A x = 0 (mod L)."""
    total = 1
    for i in range(dz.cols):
        d = _diag_at(dz, i) if i < dz.rows else 0
        total *= math.gcd(d, L)
    return total


def iter_solutions(A: Sequence[Sequence[int]], b: Sequence[int], L: int,
                   cols: int | None = None, limit: int | None = None) -> Iterator[list[int]]:
    """All solutions of A x = b (mod L), in a deterministic order."""
    dz = diagonalize(A, cols)
    x0 = solve_mod(A, b, L, dz=dz)
    if x0 is None:
        return
    gens = kernel_orders(dz, L)
    total = 1
    for g, _ in gens:
        total *= g
    if limit is not None and total > limit:
        raise OverflowError(f"{total} solutions exceed the enumeration limit {limit}")
    seen = set()
    for ks in itertools.product(*(range(g) for g, _ in gens)):
        x = list(x0)
        for k, (_, vec) in zip(ks, gens):
            if k:
                x = [(xi + k * vi) % L for xi, vi in zip(x, vec)]
        key = tuple(x)
        if key not in seen:
            seen.add(key)
            yield x


class LinearSystem:
    """Incrementally assembled congruence system over named unknowns."""

    def __init__(self) -> None:
        self.index: dict = {}
        self.rows: list[dict[int, int]] = []
        self.rhs: list[int] = []
        self.tags: list = []

    def var(self, key) -> int:
        if key not in self.index:
            self.index[key] = len(self.index)
        return self.index[key]

    def add(self, terms: dict, rhs: int, tag=None) -> None:
        row: dict[int, int] = {}
        for key, coef in terms.items():
            j = self.var(key)
            row[j] = row.get(j, 0) + coef
        self.rows.append({j: c for j, c in row.items() if c})
        self.rhs.append(rhs)
        self.tags.append(tag)

    def matrix(self) -> list[list[int]]:
        n = len(self.index)
        out = []
        for row in self.rows:
            r = [0] * n
            for j, c in row.items():
                r[j] = c
            out.append(r)
        return out

    def solve(self, L: int) -> dict | None:
        n = len(self.index)
        if not self.rows:
            return {k: 0 for k in self.index}
        x = solve_mod(self.matrix(), [r % L for r in self.rhs], L, cols=n)
        if x is None:
            return None
        return {k: x[j] for k, j in self.index.items()}

    def first_inconsistent(self, L: int):
        """Tag of an equation that cannot hold in any solution, by adding rows one at a time."""
        n = len(self.index)
        acc: list[list[int]] = []
        rhs: list[int] = []
        for row, r, tag in zip(self.rows, self.rhs, self.tags):
            vec = [0] * n
            for j, c in row.items():
                vec[j] = c
            acc.append(vec)
            rhs.append(r % L)
            if solve_mod(acc, rhs, L, cols=n) is None:
                return tag
        return None
