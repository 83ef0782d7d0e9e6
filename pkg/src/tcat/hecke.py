"""Kazhdan-Lusztig bases, cells, the a-function and the asymptotic ring J.

Normalization: the Hecke algebra has basis T_w with (T_s - v)(T_s + v^-1) = 0,
so T_s T_y = T_sy when sy > y and T_sy + (v - v^-1) T_y otherwise.  The KL
basis element b_w = sum_x p_{x,w} T_x is bar invariant with p_{w,w} = 1 and
p_{x,w} in v^-1 Z[v^-1] for x < w; in particular b_s = T_s + v^-1.  The
classical polynomials are recovered from p_{x,w} = v^-(l(w)-l(x)) P_{x,w}(v^2).

Structure constants: b_x b_y = sum_z h_{x,y,z} b_z, a(z) = max deg_v h_{x,y,z},
and the asymptotic ring has t_x t_y = sum_z gamma_{x,y,z^-1} t_z with
gamma_{x,y,z^-1} the coefficient of v^a(z) in h_{x,y,z}.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .coxeter import CoxeterGroup
from .laurent import ONE, V, VINV, Laurent, q_polynomial_from_p

Combo = dict[int, Laurent]


def _add_into(acc: Combo, key: int, val: Laurent) -> None:
    cur = acc.get(key)
    new = val if cur is None else cur + val
    if new.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = new


def t_left_mult(W: CoxeterGroup, s: int, h: Combo) -> Combo:
    """T_s * h for h in the T-basis."""
    out: Combo = {}
    v_minus = V - VINV
    for y, c in h.items():
        sy = W.lmul[s][y]
        _add_into(out, sy, c)
        if W.length[sy] < W.length[y]:
            _add_into(out, y, c * v_minus)
    return out


def b_left_mult(W: CoxeterGroup, s: int, h: Combo) -> Combo:
    """b_s * h = T_s h + v^-1 h in the T-basis."""
    out = t_left_mult(W, s, h)
    for y, c in h.items():
        _add_into(out, y, c * VINV)
    return out


@dataclass
class KLTable:
    W: CoxeterGroup
    p: list[Combo]  # p[w][x] = p_{x,w}
    mu_below: list[list[tuple[int, int]]]  # mu_below[w] = [(z, mu(z, w))] for z < w, mu != 0

    def p_poly(self, x: int, w: int) -> Laurent:
        return self.p[w].get(x, Laurent())

    def P(self, x: int, w: int) -> list[int]:
        """Coefficients of P_{x,w}(q), lowest degree first; [] when x is not below w."""
        return q_polynomial_from_p(self.p_poly(x, w), self.W.length[w] - self.W.length[x])

    def mu(self, z: int, w: int) -> int:
        return self.p_poly(z, w).coeff(-1)

    def bruhat_le(self, x: int, w: int) -> bool:
        return x in self.p[w]


def kl_polynomials(W: CoxeterGroup) -> KLTable:
    """KL basis by b_w = b_s b_sw - sum_{z < sw, sz < z} mu(z, sw) b_z, stratum by stratum."""
    size = W.order
    p: list[Combo | None] = [None] * size
    p[0] = {0: ONE}
    mu_below: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    for w in range(1, size):  # ShortLex order refines length
        s = W.words[w][0]
        y = W.lmul[s][w]
        h = b_left_mult(W, s, p[y])
        for z, m in mu_below[y]:
            if W.length[W.lmul[s][z]] < W.length[z]:
                for x, c in p[z].items():
                    _add_into(h, x, c * (-m))
        p[w] = h
        mu_below[w] = [(z, c.coeff(-1)) for z, c in sorted(h.items()) if z != w and c.coeff(-1)]
    table = KLTable(W, p, mu_below)
    _assert_kl_invariants(table)
    return table


def _assert_kl_invariants(kl: KLTable) -> None:
    W = kl.W
    for w in range(W.order):
        if kl.p[w].get(w) != ONE:
            raise AssertionError(f"p_(w,w) != 1 at {W.word_str(w)}")
        for x, c in kl.p[w].items():
            if x == w:
                continue
            if c.degree() is None or c.degree() > -1:
                raise AssertionError(f"p_({W.word_str(x)},{W.word_str(w)}) = {c} is not in v^-1 Z[v^-1]")
            P = kl.P(x, w)
            gap = W.length[w] - W.length[x]
            if 2 * (len(P) - 1) > gap - 1:
                raise AssertionError(f"degree bound fails for P_({W.word_str(x)},{W.word_str(w)})")


def kl_checks(kl: KLTable) -> list[tuple[str, bool, str]]:
    """Named invariant checks, each with a witness on failure."""
    W = kl.W
    out = []
    bad = next(((x, w) for w in range(W.order) for x in kl.p[w]
                if any(c < 0 for c in kl.P(x, w))), None)
    out.append(("P coefficients non-negative", bad is None, "" if bad is None else
                f"P_({W.word_str(bad[0])},{W.word_str(bad[1])})"))
    bad = next(((x, w) for w in range(W.order) for x in kl.p[w]
                if kl.P(x, w) != kl.P(W.inverse[x], W.inverse[w])), None)
    out.append(("P_{x,w} = P_{x^-1,w^-1}", bad is None, "" if bad is None else
                f"({W.word_str(bad[0])},{W.word_str(bad[1])})"))
    out.append(("P_{w,w} = 1", all(kl.P(w, w) == [1] for w in range(W.order)), ""))
    bad = next(((x, w) for w in range(W.order) for x in kl.p[w] if x != w and
                2 * (len(kl.P(x, w)) - 1) > W.length[w] - W.length[x] - 1), None)
    out.append(("deg P_{x,w} <= (l(w)-l(x)-1)/2", bad is None, "" if bad is None else str(bad)))
    return out


# structure constants --------------------------------------------------------------------

def b_s_on_kl(W: CoxeterGroup, kl: KLTable, s: int) -> list[Combo]:
    """b_s b_w in the KL basis, for every w."""
    out = []
    for w in range(W.order):
        sw = W.lmul[s][w]
        if W.length[sw] < W.length[w]:
            out.append({w: V + VINV})
        else:
            combo: Combo = {sw: ONE}
            for z, m in kl.mu_below[w]:
                if W.length[W.lmul[s][z]] < W.length[z]:
                    _add_into(combo, z, Laurent.const(m))
            out.append(combo)
    return out


def structure_constants(W: CoxeterGroup, kl: KLTable) -> list[list[Combo]]:
    """h[x][y] = {z: h_{x,y,z}} via left-multiplication operators L_x = L_s L_sx - sum mu L_z."""
    size = W.order
    Ls = [b_s_on_kl(W, kl, s) for s in range(W.rank)]
    h: list[list[Combo] | None] = [None] * size
    h[0] = [{y: ONE} for y in range(size)]
    for x in range(1, size):
        s = W.words[x][0]
        y = W.lmul[s][x]
        rows = []
        corrections = [(z, m) for z, m in kl.mu_below[y] if W.length[W.lmul[s][z]] < W.length[z]]
        for w in range(size):
            acc: Combo = {}
            for u, c in h[y][w].items():
                for z, d in Ls[s][u].items():
                    _add_into(acc, z, c * d)
            for z, m in corrections:
                for u, c in h[z][w].items():
                    _add_into(acc, u, c * (-m))
            rows.append(acc)
        h[x] = rows
    return h


def a_function(W: CoxeterGroup, h: list[list[Combo]]) -> list[int]:
    a = [0] * W.order
    for x in range(W.order):
        for y in range(W.order):
            for z, c in h[x][y].items():
                d = c.degree()
                if d is not None and d > a[z]:
                    a[z] = d
    return a


def _scc(nodes: int, edges: list[set[int]]) -> list[list[int]]:
    reach = []
    for u in range(nodes):
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in edges[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        reach.append(seen)
    comp_of = [-1] * nodes
    comps = []
    for u in range(nodes):
        if comp_of[u] >= 0:
            continue
        members = sorted(x for x in reach[u] if u in reach[x])
        for x in members:
            comp_of[x] = len(comps)
        comps.append(members)
    return comps, reach


@dataclass
class CellData:
    W: CoxeterGroup
    left_cells: list[list[int]]
    right_cells: list[list[int]]
    two_sided: list[list[int]]
    lr_order: set[tuple[int, int]]  # (i, j): two_sided[i] <=_LR two_sided[j]
    a: list[int]
    delta: list[int]
    distinguished: list[int]
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def cell_of(self, w: int) -> int:
        return next(i for i, c in enumerate(self.two_sided) if w in c)

    def cell_a(self, i: int) -> int:
        return self.a[self.two_sided[i][0]]


def cells_and_a(W: CoxeterGroup, kl: KLTable, h: list[list[Combo]] | None = None) -> CellData:
    if h is None:
        h = structure_constants(W, kl)
    size = W.order
    a = a_function(W, h)
    left_edges = [set() for _ in range(size)]
    right_edges = [set() for _ in range(size)]
    for s in range(W.rank):
        for w in range(size):
            for z in h[W.lmul[s][0]][w]:
                left_edges[w].add(z)
            for z in h[W.lmul[s][0]][W.inverse[w]]:
                right_edges[w].add(W.inverse[z])
    left, _ = _scc(size, left_edges)
    right, _ = _scc(size, right_edges)
    both = [left_edges[u] | right_edges[u] for u in range(size)]
    two, reach = _scc(size, both)
    two.sort(key=lambda c: (a[c[0]], c[0]))
    left.sort(key=lambda c: c[0])
    right.sort(key=lambda c: c[0])
    order = set()
    for i, ci in enumerate(two):
        for j, cj in enumerate(two):
            if ci[0] in reach[cj[0]]:
                order.add((i, j))
    delta = []
    for z in range(size):
        P = kl.P(0, z)
        delta.append(W.length[z] - 2 * (len(P) - 1))
    D = [z for z in range(size) if a[z] == delta[z]]
    data = CellData(W, left, right, two, order, a, delta, D)
    data.checks = cell_checks(data)
    return data


def cell_checks(cd: CellData) -> list[tuple[str, bool, str]]:
    W = cd.W
    out = []
    bad = next((c for c in cd.two_sided if len({cd.a[w] for w in c}) != 1), None)
    out.append(("a constant on two-sided cells", bad is None, "" if bad is None else W.word_str(bad[0])))
    out.append(("a(e) = 0", cd.a[0] == 0, ""))
    out.append(("a(w0) = l(w0)", cd.a[W.longest] == W.length[W.longest], ""))
    bad = next((d for d in cd.distinguished if not W.is_involution(d)), None)
    out.append(("distinguished elements are involutions", bad is None, "" if bad is None else W.word_str(bad)))
    Dset = set(cd.distinguished)
    bad = next((c for c in cd.left_cells if len(Dset.intersection(c)) != 1), None)
    out.append(("one distinguished involution per left cell", bad is None, "" if bad is None else W.word_str(bad[0])))
    return out


# asymptotic ring ----------------------------------------------------------------------

@dataclass
class JRing:
    W: CoxeterGroup
    cells: CellData
    mult: dict[tuple[int, int], dict[int, int]]  # t_x t_y = sum_z mult[x, y][z] t_z
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def product(self, x: int, y: int) -> dict[int, int]:
        return self.mult.get((x, y), {})

    def gamma(self, x: int, y: int, z: int) -> int:
        return self.product(x, y).get(self.W.inverse[z], 0)

    def multiply(self, u: dict[int, int], w: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for x, c in u.items():
            for y, d in w.items():
                for z, e in self.product(x, y).items():
                    out[z] = out.get(z, 0) + c * d * e
        return {k: v for k, v in out.items() if v}

    @property
    def unit(self) -> dict[int, int]:
        return {d: 1 for d in self.cells.distinguished}

    def block(self, i: int) -> list[int]:
        return self.cells.two_sided[i]


def j_ring(W: CoxeterGroup, kl: KLTable, cells: CellData, h: list[list[Combo]] | None = None,
           exhaustive_limit: int = 24, samples: int = 4000, seed: int = 0) -> JRing:
    if h is None:
        h = structure_constants(W, kl)
    a = cells.a
    mult = {}
    for x in range(W.order):
        for y in range(W.order):
            row = {}
            for z, c in h[x][y].items():
                g = c.coeff(a[z])
                if g:
                    row[z] = g
            if row:
                mult[(x, y)] = row
    J = JRing(W, cells, mult)
    J.checks = j_checks(J, exhaustive_limit, samples, seed)
    return J


def j_checks(J: JRing, exhaustive_limit: int = 24, samples: int = 4000, seed: int = 0):
    W = J.W
    n = W.order
    out = []
    if n <= exhaustive_limit:
        triples = itertools.product(range(n), repeat=3)
        how = "exhaustive"
    else:
        rng = random.Random(seed)
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        how = f"{samples} random triples"
    bad = None
    for x, y, z in triples:
        if J.multiply(J.multiply({x: 1}, {y: 1}), {z: 1}) != J.multiply({x: 1}, J.multiply({y: 1}, {z: 1})):
            bad = (x, y, z)
            break
    out.append((f"J associative ({how})", bad is None, "" if bad is None else
                " | ".join(W.word_str(t) for t in bad)))
    unit = J.unit
    bad = next((x for x in range(n) if J.multiply(unit, {x: 1}) != {x: 1} or J.multiply({x: 1}, unit) != {x: 1}), None)
    out.append(("sum of t_d is a two-sided unit", bad is None, "" if bad is None else W.word_str(bad)))
    bad = next(((x, y, z) for x in range(n) for y in range(n) for z in J.product(x, y)
                if J.gamma(x, y, W.inverse[z]) != J.gamma(y, W.inverse[z], x)), None)
    out.append(("gamma cyclic symmetry", bad is None, "" if bad is None else str(bad)))
    bad = next(((x, y) for (x, y), row in J.mult.items() if any(v < 0 for v in row.values())), None)
    out.append(("gamma non-negative", bad is None, "" if bad is None else str(bad)))
    cell_of = {w: i for i, c in enumerate(J.cells.two_sided) for w in c}
    bad = next(((x, y) for (x, y), row in J.mult.items()
                if any(not (cell_of[x] == cell_of[y] == cell_of[z]) for z in row)), None)
    out.append(("J = direct sum of J_c over two-sided cells", bad is None, "" if bad is None else str(bad)))
    return out


@dataclass
class CornerRing:
    basis: list[int]
    table: dict[tuple[int, int], dict[int, int]]
    tag: str


def corner_ring(J: JRing, cell: int, d: int) -> CornerRing:
    """Basis {t_x : x in c, t_d t_x t_d = t_x} of t_d J_c t_d, its table and a type tag."""
    members = J.cells.two_sided[cell]
    if d not in members or d not in J.cells.distinguished:
        raise ValueError(f"{J.W.word_str(d)} is not a distinguished involution of cell {cell}")
    basis = [x for x in members if J.multiply(J.multiply({d: 1}, {x: 1}), {d: 1}) == {x: 1}]
    table = {(x, y): J.product(x, y) for x in basis for y in basis}
    tag = "other"
    if len(basis) == 1 and table[(d, d)] == {d: 1}:
        tag = "trivial"
    elif len(basis) == 2:
        (delta,) = [x for x in basis if x != d]
        if table[(delta, delta)] == {d: 1} and table[(d, delta)] == {delta: 1} == table[(delta, d)]:
            tag = "Z[Z/2]"
    return CornerRing(basis, table, tag)


@dataclass
class HeckeData:
    W: CoxeterGroup
    kl: KLTable
    h: list[list[Combo]]
    cells: CellData
    J: JRing


def analyze(type_name: str) -> HeckeData:
    from .coxeter import build_group
    W = build_group(type_name)
    kl = kl_polynomials(W)
    h = structure_constants(W, kl)
    cells = cells_and_a(W, kl, h)
    J = j_ring(W, kl, cells, h)
    return HeckeData(W, kl, h, cells, J)
