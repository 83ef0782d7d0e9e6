"""Module categories over pointed fusion categories and their endofunctor categories.

A module category over D whose simples are all invertible is a permutation
action ``a |> m`` of the simples of D on the module simples together with
scalars ``mu(a, b, m) : (a b) |> m -> a |> (b |> m)`` satisfying the mixed
pentagon

    mu(a, b, c |> m) mu(ab, c, m) = mu(b, c, m) mu(a, bc, m) F(a, b, c).

A module functor M1 -> M2 that is a bijection on simples is a pair (phi, s)
with ``s(a, m) : phi(a |> m) -> a |> phi(m)`` and

    mu1(a, b, m) s(a, b |> m) s(b, m) = s(ab, m) mu2(a, b, phi m).

Natural isomorphisms theta act by s'(a, m) = s(a, m) theta(m) / theta(a |> m).
All bounded searches are linear congruences on exponents (see ``linmod``).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cocycles import standard_cocycle
from .cyclotomic import ONE, CycNumber, cyc, order_lcm, root_of_unity_exponent
from .fusion import (DEFAULT_ROOT_BOUND, FusionData, gauge_equivalent, pentagon_check,
                     pointed_category)
from .linmod import LinearSystem, diagonalize, iter_solutions, kernel_orders, solve_mod

MAX_FUNCTOR_SOLUTIONS = 10_000


class UnsupportedCategory(ValueError):
    pass


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class ModuleSolution:
    """A module category over ``base`` given by a permutation action and scalars mu."""

    base: FusionData
    simples: tuple[str, ...]
    action: Mapping[tuple[str, str], str]
    mu: Mapping[tuple[str, str, str], CycNumber]
    representative: bool = True

    @property
    def rank(self) -> int:
        return len(self.simples)

    def act(self, a: str, m: str) -> str:
        return self.action[(a, m)]

    def assoc(self, a: str, b: str, m: str) -> CycNumber:
        return self.mu.get((a, b, m), ONE)

    def components(self) -> list[list[str]]:
        parent = {m: m for m in self.simples}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, m), m2 in self.action.items():
            r1, r2 = find(m), find(m2)
            if r1 != r2:
                parent[max(r1, r2)] = min(r1, r2)
        groups: dict[str, list[str]] = {}
        for m in self.simples:
            groups.setdefault(find(m), []).append(m)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def indecomposable(self) -> bool:
        return len(self.components()) == 1

    def stabilizer(self, m: str) -> frozenset[str]:
        return frozenset(a for a in self.base.simples if self.act(a, m) == m)

    def describe(self) -> dict:
        return {
            "rank": self.rank,
            "simples": list(self.simples),
            "action": {f"{a}|>{m}": v for (a, m), v in sorted(self.action.items())},
            "mu": {f"({a},{b},{m})": str(x) for (a, b, m), x in sorted(self.mu.items()) if x != 1},
        }


def _mul(D: FusionData, a: str, b: str) -> str:
    (c,) = D.fuse(a, b)
    return c


def _require_pointed(D: FusionData) -> None:
    if len(D.unit) != 1 or not D.is_invertible():
        raise UnsupportedCategory("module computations need a pointed fusion category as base")


def mixed_pentagon_violations(M: ModuleSolution) -> list[tuple[str, str, str, str]]:
    D = M.base
    bad = []
    for a, b, c in itertools.product(D.simples, repeat=3):
        ab, bc = _mul(D, a, b), _mul(D, b, c)
        f = D.omega(a, b, c)
        for m in M.simples:
            lhs = M.assoc(a, b, M.act(c, m)) * M.assoc(ab, c, m)
            rhs = M.assoc(b, c, m) * M.assoc(a, bc, m) * f
            if lhs != rhs:
                bad.append((a, b, c, m))
    return bad


def check_action(M: ModuleSolution) -> None:
    D = M.base
    (one,) = D.unit
    for m in M.simples:
        if M.act(one, m) != m:
            raise ModuleError(f"unit does not act trivially on {m}")
    for a, b in itertools.product(D.simples, repeat=2):
        for m in M.simples:
            if M.act(_mul(D, a, b), m) != M.act(a, M.act(b, m)):
                raise ModuleError(f"action is not associative at ({a},{b},{m})")
    for a in D.simples:
        if len({M.act(a, m) for m in M.simples}) != len(M.simples):
            raise ModuleError(f"{a} does not act by a permutation")


def regular_module(C: FusionData) -> ModuleSolution:
    """C acting on itself by left multiplication, with mu = F."""
    _require_pointed(C)
    action = {(a, m): _mul(C, a, m) for a in C.simples for m in C.simples}
    mu = {(a, b, m): C.omega(a, b, m) for a in C.simples for b in C.simples for m in C.simples}
    M = ModuleSolution(C, C.simples, action, mu)
    assert not mixed_pentagon_violations(M)
    return M


def direct_sum(M: ModuleSolution, copies: int) -> ModuleSolution:
    """M^(+copies); simples are labeled ``i:m``."""
    if copies < 1:
        raise ModuleError("copies must be >= 1")
    lab = {(i, m): f"{i}:{m}" for i in range(copies) for m in M.simples}
    action = {(a, lab[i, m]): lab[i, M.act(a, m)] for i in range(copies) for (a, m) in M.action}
    mu = {(a, b, lab[i, m]): x for i in range(copies) for (a, b, m), x in M.mu.items()}
    return ModuleSolution(M.base, tuple(sorted(lab.values())), action, mu)


def module_from_corner(C: FusionData, e: str) -> tuple[FusionData, ModuleSolution]:
    """The corner e C e and the module e C over it (left multiplication)."""
    from .convolution import corner_category
    if not C.is_invertible():
        raise UnsupportedCategory("module extraction is implemented for categories with invertible simples")
    D = corner_category(C, e)
    simples = tuple(x for x in C.simples if C.left_unit(x) == e)
    action = {(a, m): _mul(C, a, m) for a in D.simples for m in simples}
    mu = {(a, b, m): C.omega(a, b, m) for a in D.simples for b in D.simples for m in simples}
    M = ModuleSolution(D, simples, action, mu)
    assert not mixed_pentagon_violations(M)
    return D, M


# classification ------------------------------------------------------------------------

def transitive_actions(D: FusionData, r: int) -> list[dict[tuple[str, str], str]]:
    """Transitive permutation actions of the simples of D on r points, up to relabeling."""
    _require_pointed(D)
    points = [f"m{i}" for i in range(r)]
    perms = list(itertools.permutations(range(r)))
    (one,) = D.unit
    others = [a for a in D.simples if a != one]
    seen: set = set()
    out = []
    for choice in itertools.product(perms, repeat=len(others)):
        rho = {one: tuple(range(r))}
        rho.update(dict(zip(others, choice)))
        ok = all(tuple(rho[a][rho[b][i]] for i in range(r)) == rho[_mul(D, a, b)]
                 for a in D.simples for b in D.simples)
        if not ok:
            continue
        reach = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for a in D.simples:
                j = rho[a][i]
                if j not in reach:
                    reach.add(j)
                    frontier.append(j)
        if len(reach) != r:
            continue
        key = min(tuple(tuple(sig[rho[a][inv[i]]] for i in range(r)) for a in D.simples)
                  for sig in perms for inv in [_inverse(sig)])
        if key in seen:
            continue
        seen.add(key)
        out.append({(a, points[i]): points[rho[a][i]] for a in D.simples for i in range(r)})
    return out


def _inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


@dataclass
class Obstruction:
    rank: int
    action: dict
    witness: tuple


@dataclass
class ModuleClassification:
    base: FusionData
    root_bound: int
    solutions: list[ModuleSolution]
    obstructions: list[Obstruction] = field(default_factory=list)
    complete: bool = True
    notes: list[str] = field(default_factory=list)


class _MuSystem:
    """Mixed-pentagon congruences for one action, with coboundary data for gauge tests."""

    def __init__(self, D: FusionData, points: Sequence[str], action, L: int):
        self.D, self.points, self.action, self.L = D, tuple(points), action, L
        (one,) = D.unit
        self.one = one
        nonunit = [a for a in D.simples if a != one]
        self.keys = [(a, b, m) for a in nonunit for b in nonunit for m in self.points]
        self.system = LinearSystem()
        for k in self.keys:
            self.system.var(k)
        self.solvable = True
        for a, b, c in itertools.product(D.simples, repeat=3):
            ab, bc = _mul(D, a, b), _mul(D, b, c)
            k = root_of_unity_exponent(D.omega(a, b, c), L)
            if k is None:
                self.solvable = False
                continue
            for m in self.points:
                terms: dict = {}
                for key, sgn in (((a, b, action[(c, m)]), 1), ((ab, c, m), 1),
                                 ((b, c, m), -1), ((a, bc, m), -1)):
                    if one in key[:2]:
                        continue
                    terms[key] = terms.get(key, 0) + sgn
                terms = {key: s for key, s in terms.items() if s}
                if not terms:
                    if k % L:
                        self.system.add({}, k, tag=(a, b, c, m))
                    continue
                self.system.add(terms, k, tag=(a, b, c, m))
        # coboundary map gamma -> mu, gamma(a, m) for non-unit a
        self.gkeys = [(a, m) for a in nonunit for m in self.points]
        gidx = {k: i for i, k in enumerate(self.gkeys)}
        rows = []
        for a, b, m in self.keys:
            row = [0] * len(self.gkeys)
            for key, sgn in (((a, action[(b, m)]), 1), ((b, m), 1), ((_mul(D, a, b), m), -1)):
                if key[0] != one:
                    row[gidx[key]] += sgn
            rows.append(row)
        self.cob = rows
        self.M = L * len(D.simples)
        self.cob_dz = diagonalize(rows, len(self.gkeys)) if self.gkeys else None

    def exponents(self, mu: Mapping) -> list[int]:
        return [root_of_unity_exponent(mu.get(k, ONE), self.L) for k in self.keys]

    def is_coboundary(self, x: Sequence[int]) -> bool:
        if not self.keys:
            return True
        if self.cob_dz is None:
            return all(v % self.L == 0 for v in x)
        scale = self.M // self.L
        b = [(v * scale) % self.M for v in x]
        return solve_mod(self.cob, b, self.M, cols=len(self.gkeys), dz=self.cob_dz) is not None

    def automorphisms(self) -> list[dict[str, str]]:
        out = []
        for perm in itertools.permutations(self.points):
            phi = dict(zip(self.points, perm))
            if all(phi[self.action[(a, m)]] == self.action[(a, phi[m])]
                   for a in self.D.simples for m in self.points):
                out.append(phi)
        return out

    def equivalent(self, x1: Sequence[int], x2: Sequence[int]) -> bool:
        pos = {k: i for i, k in enumerate(self.keys)}
        for phi in self.automorphisms():
            pulled = [x2[pos[(a, b, phi[m])]] for (a, b, m) in self.keys]
            if self.is_coboundary([(p - q) % self.L for p, q in zip(pulled, x1)]):
                return True
        return False


def _allowlisted(C: FusionData) -> str | None:
    for name, (n, p) in (("Vec_Z2", (2, 0)), ("VecOmega_Z2", (2, 1)), ("Vec_Z3", (3, 0))):
        ref = pointed_category(standard_cocycle(n, p))
        if len(ref.simples) == len(C.simples) and gauge_equivalent(C, ref, 8) is not None:
            return name
    return None


def module_categories(C: FusionData, max_rank: int, root_bound: int | None = None,
                      max_classes_per_action: int = 64) -> ModuleClassification:
    """Indecomposable module categories of rank <= max_rank, up to equivalence.

    Scalars are searched in mu_root_bound; module gauges are allowed in
    mu_(root_bound * |C|), which is enough for every coboundary between
    mu_root_bound-valued solutions to be detected.
    """
    if max_rank > 3 or max_rank < 1:
        raise UnsupportedCategory("max_rank must be between 1 and 3")
    if _allowlisted(C) is None:
        raise UnsupportedCategory("module classification is restricted to Vec_Z2, Vec_Z2^omega and Vec_Z3")
    L = root_bound or math.lcm(DEFAULT_ROOT_BOUND, len(C.simples), order_lcm(C.nonzero_values()))
    result = ModuleClassification(C, L, [])
    for r in range(1, max_rank + 1):
        for action in transitive_actions(C, r):
            points = sorted({m for (_, m) in action})
            ms = _MuSystem(C, points, action, L)
            A = ms.system.matrix()
            rhs = [v % L for v in ms.system.rhs]
            x0 = solve_mod(A, rhs, L, cols=len(ms.keys)) if ms.solvable else None
            if x0 is None:
                tag = ms.system.first_inconsistent(L) if ms.solvable else None
                result.obstructions.append(Obstruction(r, dict(action), tag))
                continue
            dz = diagonalize(A, len(ms.keys))
            gens = [vec for _, vec in kernel_orders(dz, L)]
            reps = [list(x0)]
            frontier = [list(x0)]
            while frontier:
                x = frontier.pop()
                for gvec in gens:
                    y = [(xi + gi) % L for xi, gi in zip(x, gvec)]
                    if any(ms.equivalent(y, rep) for rep in reps):
                        continue
                    reps.append(y)
                    frontier.append(y)
                    if len(reps) > max_classes_per_action:
                        result.complete = False
                        result.notes.append(f"rank {r}: class enumeration capped at {max_classes_per_action}")
                        frontier = []
                        break
            for x in reps:
                mu = {k: cyc(L, v) for k, v in zip(ms.keys, x) if v % L}
                sol = ModuleSolution(C, tuple(points), dict(action), mu)
                if mixed_pentagon_violations(sol):
                    raise AssertionError("solver returned a non-solution")
                result.solutions.append(sol)
    result.notes.append(f"scalars searched in mu_{L}; completeness is relative to this bound")
    return result


def module_equivalent(M1: ModuleSolution, M2: ModuleSolution, root_bound: int | None = None) -> bool:
    """Equivalence of module categories over the same base: bijection on simples plus gauge."""
    if M1.rank != M2.rank:
        return False
    D = M1.base
    L = root_bound or math.lcm(DEFAULT_ROOT_BOUND, len(D.simples),
                               order_lcm(list(M1.mu.values()) + list(M2.mu.values()) + D.nonzero_values()))
    Lbig = L * len(D.simples)
    for perm in itertools.permutations(M2.simples):
        phi = dict(zip(M1.simples, perm))
        if not all(phi[M1.act(a, m)] == M2.act(a, phi[m]) for a in D.simples for m in M1.simples):
            continue
        if _functor_scalars(D, M1, M2, phi, Lbig) is not None:
            return True
    return False


def _functor_scalars(D, M1, M2, phi, L) -> dict | None:
    one = D.unit[0]
    system = LinearSystem()
    for a in D.simples:
        if a != one:
            for m in M1.simples:
                system.var((a, m))
    for a, b in itertools.product(D.simples, repeat=2):
        ab = _mul(D, a, b)
        for m in M1.simples:
            k = root_of_unity_exponent(M2.assoc(a, b, phi[m]) / M1.assoc(a, b, m), L)
            if k is None:
                return None
            terms: dict = {}
            for key, sgn in (((a, M1.act(b, m)), 1), ((b, m), 1), ((ab, m), -1)):
                if key[0] != one:
                    terms[key] = terms.get(key, 0) + sgn
            system.add({kk: v for kk, v in terms.items() if v}, k)
    return system.solve(L)


# module functors and Fun_D(M, M) -------------------------------------------------------------

@dataclass(frozen=True)
class ModuleFunctor:
    """A simple module endofunctor that is a bijection from component ``src`` onto ``dst``."""

    label: str
    src: int
    dst: int
    phi: Mapping[str, str]
    s: Mapping[tuple[str, str], int]  # exponents mod L, unit entries omitted


class FunctorCategory:
    """Simple module endofunctors of a module category, with composition data."""

    def __init__(self, M: ModuleSolution, root_bound: int | None = None):
        D = M.base
        _require_pointed(D)
        check_action(M)
        if mixed_pentagon_violations(M):
            raise ModuleError("module data fails the mixed pentagon")
        self.M, self.D = M, D
        self.one = D.unit[0]
        self.L = root_bound or math.lcm(DEFAULT_ROOT_BOUND, len(D.simples),
                                        order_lcm(list(M.mu.values()) + D.nonzero_values()))
        self.comps = M.components()
        self.comp_of = {m: i for i, c in enumerate(self.comps) for m in c}
        stabs = {self._stab(c[0]) for c in self.comps}
        if len(stabs) != 1:
            raise UnsupportedCategory("components with different stabilizers give non-monomial functors")
        self.path = {}
        for c in self.comps:
            base = c[0]
            for m in c:
                if m != base:
                    self.path[m] = next(a for a in D.simples if M.act(a, base) == m)
        self.functors: list[ModuleFunctor] = []
        for i, ci in enumerate(self.comps):
            for j, cj in enumerate(self.comps):
                for target in cj:
                    phi = self._translation(ci[0], target)
                    if phi is None:
                        continue
                    for k, s in enumerate(self._solve_s(ci, phi)):
                        label = f"c{i}>c{j}:{target}#{k}"
                        self.functors.append(ModuleFunctor(label, i, j, phi, s))
        self.by_label = {f.label: f for f in self.functors}
        self.identity = {}
        for f in self.functors:
            if f.src == f.dst and all(f.phi[m] == m for m in f.phi) and not any(f.s.values()):
                self.identity[f.src] = f
        if len(self.identity) != len(self.comps):
            raise AssertionError("identity functor missing from the simple functor list")

    def _stab(self, m):
        return frozenset(a for a in self.D.simples if self.M.act(a, m) == m)

    def _translation(self, base: str, target: str) -> dict[str, str] | None:
        phi: dict[str, str] = {}
        for a in self.D.simples:
            src, dst = self.M.act(a, base), self.M.act(a, target)
            if phi.setdefault(src, dst) != dst:
                return None
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    def _solve_s(self, comp: list[str], phi: Mapping[str, str]) -> list[dict]:
        D, M, L, one = self.D, self.M, self.L, self.one
        system = LinearSystem()
        for a in D.simples:
            if a != one:
                for m in comp:
                    system.var((a, m))
        for a, b in itertools.product(D.simples, repeat=2):
            ab = _mul(D, a, b)
            for m in comp:
                k = root_of_unity_exponent(M.assoc(a, b, phi[m]) / M.assoc(a, b, m), L)
                if k is None:
                    return []
                terms: dict = {}
                for key, sgn in (((a, M.act(b, m)), 1), ((b, m), 1), ((ab, m), -1)):
                    if key[0] != one:
                        terms[key] = terms.get(key, 0) + sgn
                system.add({kk: v for kk, v in terms.items() if v}, k)
        base = comp[0]
        for m in comp[1:]:
            system.add({(self.path[m], base): 1}, 0)
        keys = list(system.index)
        out = []
        for x in iter_solutions(system.matrix(), [v % L for v in system.rhs], L, cols=len(keys),
                                limit=MAX_FUNCTOR_SOLUTIONS):
            out.append({keys[i]: x[i] % L for i in range(len(keys))})
        return out

    def s_value(self, f: ModuleFunctor, a: str, m: str) -> int:
        return 0 if a == self.one else f.s[(a, m)]

    def compose(self, X: ModuleFunctor, Y: ModuleFunctor) -> tuple[ModuleFunctor, dict[str, int]]:
        """The simple R isomorphic to Y o X, and eta: Y o X -> R as exponents per module simple."""
        if X.dst != Y.src:
            raise ValueError("functors are not composable")
        L = self.L
        comp = self.comps[X.src]
        phi = {m: Y.phi[X.phi[m]] for m in comp}
        s = {(a, m): (self.s_value(Y, a, X.phi[m]) + self.s_value(X, a, m)) % L
             for a in self.D.simples for m in comp}
        base = comp[0]
        theta = {base: 0}
        for m in comp[1:]:
            theta[m] = s[(self.path[m], base)]
        s_new = {(a, m): (s[(a, m)] + theta[m] - theta[self.M.act(a, m)]) % L
                 for a in self.D.simples for m in comp if a != self.one}
        for R in self.functors:
            if R.src == X.src and R.dst == Y.dst and all(R.phi[m] == phi[m] for m in comp) \
                    and all(R.s[k] == v for k, v in s_new.items()):
                return R, theta
        raise AssertionError("composite functor matches no simple functor")

    def fusion_data(self) -> FusionData:
        L = self.L
        table = {}
        for X in self.functors:
            for Y in self.functors:
                if X.dst == Y.src:
                    table[(X.label, Y.label)] = self.compose(X, Y)
        N = {(x, y, R.label): 1 for (x, y), (R, _) in table.items()}
        by = self.by_label

        def entry(a, b, c, d, e, f):
            X = by[a]
            _, eta_xy = table[(a, b)]
            _, eta_pz = table[(e, c)]
            _, eta_yz = table[(b, c)]
            _, eta_xr = table[(a, f)]
            vals = {(eta_xr[m] + eta_yz[X.phi[m]] - eta_xy[m] - eta_pz[m]) % L for m in self.comps[X.src]}
            if len(vals) != 1:
                raise AssertionError("associator is not a scalar on a simple functor")
            return cyc(L, vals.pop())

        units = [self.identity[i].label for i in range(len(self.comps))]
        out = FusionData.from_entries([f.label for f in self.functors], units, N, entry)
        report = pentagon_check(out)
        if not report.ok:
            raise AssertionError(f"endofunctor category fails the pentagon at {report.violations[0]}")
        return out


def endofunctor_category(C: FusionData, M: ModuleSolution, copies: int = 1,
                         root_bound: int | None = None) -> FusionData:
    """Fun_C(M^(+copies), M^(+copies)) as a multi-fusion category, X (x) Y := Y o X."""
    if M.base is not C and M.base != C:
        raise ModuleError("module is not over the given category")
    if mixed_pentagon_violations(M):
        raise ModuleError("invalid module data")
    Mk = direct_sum(M, copies) if copies != 1 else M
    return FunctorCategory(Mk, root_bound).fusion_data()
