"""Drinfeld centers of pointed categories, commutator functors and central functors.

A simple object of Z(Vec_G^omega) for cyclic G is a pair (g, chi) where the
half-braiding g (x) x -> x (x) g is the scalar chi(x).  The central hexagon
forces the twisted character condition

    chi(a) chi(b) = chi(a + b) beta_g(a, b),
    beta_g(a, b) = omega(g, a, b) omega(a, b, g) / omega(a, g, b).

Functors between semisimple categories whose simples are all invertible are
recorded by multiplicity tables; since every multiplicity here is 0 or 1, the
structure isomorphisms u and v are one scalar per isotypic component.

The two directions of the commutator/central correspondence are implemented
as the composite of the natural Hom-space identifications (adjunction,
duality, half-braiding, pivotal structure), each contributing one scalar in
the skeletal model.  Duality data: coev_a = 1 and ev_a = omega(a, a*, a)^-1.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping

from .cocycles import Cocycle3, is_cocycle
from .cyclotomic import ONE, CycNumber, cyc, order_lcm
from .fusion import FusionData, PivotalStructure, duality_scalars, pointed_category, unit_dimension_pivotal


class AdjunctionError(ValueError):
    pass


@dataclass(frozen=True)
class CenterSimple:
    g: int
    chi: tuple[CycNumber, ...]

    @property
    def theta(self) -> CycNumber:
        return self.chi[self.g]

    @property
    def label(self) -> str:
        return f"{self.g}|{self.chi[1 % len(self.chi)]}"

    def describe(self) -> str:
        n = len(self.chi)
        return f"g={self.g} chi(1)={self.chi[1 % n]} theta={self.theta}"

    def sort_key(self) -> tuple:
        n = len(self.chi)
        return (self.g, self.chi[1 % n].root_exponent())


def beta(w: Cocycle3, g: int, a: int, b: int) -> CycNumber:
    return w(g, a, b) * w(a, b, g) / w(a, g, b)


def drinfeld_center(w: Cocycle3) -> list[CenterSimple]:
    """All simples (g, chi) of Z(Vec_{Z/n}^omega), sorted by (g, chi(1))."""
    ok, bad = is_cocycle(w)
    if not ok:
        raise ValueError(f"not a 3-cocycle; violation at {bad[0]}")
    n = w.n
    out = []
    for g in range(n):
        betas = [beta(w, g, a, b) for a in range(n) for b in range(n)]
        # chi(a + 1) = chi(a) chi(1) / beta_g(a, 1), and chi(n) = 1 pins chi(1)^n
        target = ONE
        for a in range(n):
            target = target * beta(w, g, a, 1)
        L = n * order_lcm(betas)
        for k in range(L):
            x = cyc(L, k)
            if x ** n != target:
                continue
            chi = [ONE]
            for a in range(n - 1):
                chi.append(chi[a] * x / beta(w, g, a, 1))
            if all(chi[a] * chi[b] == chi[(a + b) % n] * beta(w, g, a, b)
                   for a in range(n) for b in range(n)):
                out.append(CenterSimple(g, tuple(c.canonical() for c in chi)))
    out.sort(key=CenterSimple.sort_key)
    if len(out) != n * n:
        raise AssertionError(f"expected {n * n} center simples, found {len(out)}")
    return out


def induction(w: Cocycle3, X: str | int) -> list[tuple[CenterSimple, int]]:
    """Isotypic decomposition of Ind(X): every (g, chi) with g = X, multiplicity 1."""
    n = w.n
    try:
        x = int(X)
    except (TypeError, ValueError):
        raise KeyError(f"unknown simple {X!r}") from None
    if not 0 <= x < n:
        raise KeyError(f"unknown simple {X!r}")
    return [(s, 1) for s in drinfeld_center(w) if s.g == x]


def twist_multiset(w: Cocycle3) -> list[CycNumber]:
    return [s.theta for s in drinfeld_center(w)]


# functor data ----------------------------------------------------------------------

@dataclass(frozen=True)
class CentralData:
    """A central functor G: A -> C onto invertible simples, v[(A, x)] : G(A) (x) x -> x (x) G(A)."""

    source: FusionData
    targets: tuple[str, ...]
    G: Mapping[str, str]
    v: Mapping[tuple[str, str], CycNumber]


@dataclass(frozen=True)
class CommutatorData:
    """A commutator functor F: C -> A; u[(x, y)][A] acts on the A-component of F(x (x) y)."""

    source: FusionData
    targets: tuple[str, ...]
    F: Mapping[str, Mapping[str, int]]
    u: Mapping[tuple[str, str], Mapping[str, CycNumber]]


def _require_pointed(C: FusionData) -> None:
    if len(C.unit) != 1 or not C.is_invertible():
        raise NotImplementedError("commutator data is implemented for pointed fusion categories")


def _prod(C: FusionData, x: str, y: str) -> str:
    (z,) = C.fuse(x, y)
    return z


def right_adjoint_table(C: FusionData, targets, G: Mapping[str, str]) -> dict[str, dict[str, int]]:
    """F(x) = sum of the targets A with G(A) = x; the transpose of G's table."""
    F = {x: {} for x in C.simples}
    for A in targets:
        if G[A] not in F:
            raise AdjunctionError(f"G sends {A} outside the source category")
        F[G[A]][A] = 1
    return F


def check_adjunction(C: FusionData, targets, G: Mapping[str, str], F: Mapping[str, Mapping[str, int]]) -> None:
    for A in targets:
        for x in C.simples:
            if int(G[A] == x) != F.get(x, {}).get(A, 0):
                raise AdjunctionError(f"Hom(G({A}), {x}) and Hom({A}, F({x})) have different dimensions")


def central_violations(c: CentralData) -> list[tuple[str, str, str]]:
    C = c.source
    w = C.omega
    bad = []
    for A in c.targets:
        g = c.G[A]
        for x, y in itertools.product(C.simples, repeat=2):
            xy = _prod(C, x, y)
            lhs = w(x, y, g) * c.v[(A, xy)] * w(g, x, y)
            rhs = c.v[(A, y)] * w(x, g, y) * c.v[(A, x)]
            if lhs != rhs:
                bad.append((A, x, y))
    return bad


def commutator_violations(k: CommutatorData) -> list[tuple[str, str, str, str]]:
    """Coherence of the definition on all simple triples, component by component."""
    C = k.source
    w = C.omega
    bad = []
    for x, y, z in itertools.product(C.simples, repeat=3):
        xy, yz, zx = _prod(C, x, y), _prod(C, y, z), _prod(C, z, x)
        xyz = _prod(C, xy, z)
        for A in k.F[xyz]:
            top = w(y, z, x) * k.u[(x, yz)][A] * w(x, y, z)
            bottom = k.u[(zx, y)][A] / w(z, x, y) * k.u[(xy, z)][A]
            if top != bottom:
                bad.append((x, y, z, A))
    return bad


def check_unit_identity(k: CommutatorData) -> bool:
    (one,) = k.source.unit
    return all(val == 1 for x in k.source.simples for val in k.u[(x, one)].values())


def check_double_swap(k: CommutatorData) -> bool:
    """u_{y,x} u_{x,y} = u_{1, x (x) y} on every pair of simples."""
    C = k.source
    (one,) = C.unit
    for x, y in itertools.product(C.simples, repeat=2):
        xy = _prod(C, x, y)
        for A in k.F[xy]:
            if k.u[(y, x)][A] * k.u[(x, y)][A] != k.u[(one, xy)][A]:
                return False
    return True


def canonical_automorphism(k: CommutatorData, X: str) -> dict[str, CycNumber]:
    (one,) = k.source.unit
    return dict(k.u[(one, X)])


def _pivotal_t(C: FusionData, pivotal: PivotalStructure | None) -> Mapping[str, CycNumber]:
    return (pivotal or unit_dimension_pivotal(C)).t


def commutator_from_central(c: CentralData, F: Mapping[str, Mapping[str, int]] | None = None,
                            pivotal: PivotalStructure | None = None) -> CommutatorData:
    """Transport a central structure on G to a commutator structure on its right adjoint F.

    For A in F(x (x) y), with g = G(A) = x (x) y, the identification

        Hom(A, F(xy)) = Hom(g, x y) = Hom(g y*, x) = Hom(y* g, x) = Hom(g, y x) = Hom(A, F(yx))

    sends the basis vector to u * (basis vector); the four inner steps
    contribute omega(x, y, y*) ev_{y*}, v(A, y*)^-1, coev_y omega(y, y*, g)
    and the pivotal scalar t(y).
    """
    C = c.source
    _require_pointed(C)
    if F is None:
        F = right_adjoint_table(C, c.targets, c.G)
    check_adjunction(C, c.targets, c.G, F)
    t = _pivotal_t(C, pivotal)
    ev = duality_scalars(C)
    w = C.omega
    u: dict = {}
    for x, y in itertools.product(C.simples, repeat=2):
        g = _prod(C, x, y)
        yd = C.dual(y)
        comp = {}
        for A in F[g]:
            step_dual = w(x, y, yd) * ev[yd]
            step_braid = c.v[(A, yd)].inv()
            step_coev = w(y, yd, g)
            comp[A] = step_dual * step_braid * step_coev * t[y]
        u[(x, y)] = comp
    return CommutatorData(C, c.targets, {x: dict(F[x]) for x in C.simples}, u)


def central_from_commutator(k: CommutatorData, G: Mapping[str, str] | None = None,
                            pivotal: PivotalStructure | None = None) -> CentralData:
    """Transport a commutator structure on F to a central structure on its left adjoint G.

    With w = g (x) x the identification

        Hom(g x, w) = Hom(g, w x*) = Hom(A, F(w x*)) = Hom(A, F(x* w)) = Hom(g, x* w) = Hom(x g, w)

    is precomposition with v(A, x)^-1.
    """
    C = k.source
    _require_pointed(C)
    if G is None:
        G = {}
        for x in C.simples:
            for A, m in k.F[x].items():
                if m:
                    G[A] = x
    check_adjunction(C, k.targets, G, k.F)
    t = _pivotal_t(C, pivotal)
    ev = duality_scalars(C)
    w = C.omega
    v = {}
    for A in k.targets:
        g = G[A]
        for x in C.simples:
            wx = _prod(C, g, x)
            xd = C.dual(x)
            step_coev = w(g, x, xd).inv()
            step_swap = k.u[(wx, xd)][A]
            step_ev = w(x, xd, wx).inv() * ev[xd] * t[x]
            v[(A, x)] = (step_coev * step_swap * step_ev).inv()
    return CentralData(C, k.targets, dict(G), v)


def center_central_data(w: Cocycle3) -> CentralData:
    """The forgetful functor Z(C) -> C with its tautological central structure."""
    C = pointed_category(w)
    simples = drinfeld_center(w)
    targets = tuple(s.label for s in simples)
    G = {s.label: str(s.g) for s in simples}
    v = {(s.label, str(x)): s.chi[x] for s in simples for x in range(w.n)}
    return CentralData(C, targets, G, v)


def identity_central_data() -> CentralData:
    """Id: Vec -> Vec with the trivial central structure."""
    from .fusion import vec
    C = vec()
    return CentralData(C, ("1",), {"1": "1"}, {("1", "1"): ONE})


def ind_commutator(w: Cocycle3, pivotal: PivotalStructure | None = None) -> CommutatorData:
    return commutator_from_central(center_central_data(w), pivotal=pivotal)


def canonical_automorphism_order(w: Cocycle3, X: str | int,
                                 pivotal: PivotalStructure | None = None) -> int:
    """lcm over the components of Ind(X) of the orders of u_{1, X}."""
    label = str(int(X)) if not isinstance(X, str) else X
    if label not in {str(a) for a in range(w.n)}:
        raise KeyError(f"unknown simple {X!r}")
    k = ind_commutator(w, pivotal)
    auto = canonical_automorphism(k, label)
    return order_lcm(auto.values())


def twists_for_pivotal(w: Cocycle3, pivotal: PivotalStructure) -> dict[str, CycNumber]:
    """Twist of each center simple, read off as the canonical automorphism of Ind."""
    k = ind_commutator(w, pivotal)
    out = {}
    for x in k.source.simples:
        out.update(canonical_automorphism(k, x))
    return out


def global_dimension(w: Cocycle3) -> int:
    # every center simple is invertible, so each contributes dimension 1
    return len(drinfeld_center(w))


def same_central(c1: CentralData, c2: CentralData) -> bool:
    return c1.targets == c2.targets and dict(c1.G) == dict(c2.G) and all(
        c1.v[key] == c2.v[key] for key in c1.v) and set(c1.v) == set(c2.v)


def same_commutator(k1: CommutatorData, k2: CommutatorData) -> bool:
    if set(k1.u) != set(k2.u):
        return False
    return all(dict(k1.u[key]) == dict(k2.u[key]) for key in k1.u)


def order_of(values) -> int | float:
    vals = list(values)
    if any(v.multiplicative_order() == math.inf for v in vals):
        return math.inf
    return order_lcm(vals)
