"""Convolution categories Coh(Y x Y) and Coh_A(Y x Y) for a free cyclic action.

Simples of Coh(Y x Y) are pairs ``y1~y2`` with (y1, y2) (x) (y2, y3) = (y1, y3)
and every F-symbol 1.  For a free action of A = Z/n on Y the simples of
Coh_A(Y x Y) are A-orbits on Y x Y, each named by its representative
``s~y`` whose first entry s is the least element of its A-orbit on Y.  In
this representative gauge the F-symbols are 1, optionally twisted by the
pullback of a cocycle omega_p along the orbit coordinate (see
:func:`conv_category`).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Mapping

from .cocycles import standard_cocycle
from .cyclotomic import ONE
from .fusion import (DEFAULT_ROOT_BOUND, FusionData, FusionGauge, StructureError, deligne_product,
                     fusion_rings_isomorphic, gauge_equivalent, pentagon_check, pointed_category,
                     solve_gauge)

_Y_LABEL = re.compile(r"[^,()\s\"~.:>#|]+")
MAX_GAUGE_SIMPLES = 16


class ConvSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ConvCatSpec:
    """A finite set Y with an optional cyclic group action given by its generator."""

    Y: tuple[str, ...]
    n: int | None = None
    action: Mapping[str, str] = field(default_factory=dict)
    p: int = 0

    def __post_init__(self):
        if not self.Y:
            raise ConvSpecError("Y must be non-empty")
        if len(set(self.Y)) != len(self.Y):
            raise ConvSpecError("Y has repeated labels")
        for y in self.Y:
            if not _Y_LABEL.fullmatch(y):
                raise ConvSpecError(f"illegal label {y!r} in Y")
        if self.n is not None:
            self._check_action()

    @classmethod
    def plain(cls, k: int) -> ConvCatSpec:
        return cls(tuple(f"y{i}" for i in range(k)))

    @classmethod
    def free_cyclic(cls, orbits: int, n: int = 2, p: int = 0) -> ConvCatSpec:
        """Y = Z/n x {0..orbits-1} with the generator shifting the first coordinate."""
        Y = tuple(f"y{o}_{k}" for o in range(orbits) for k in range(n))
        act = {f"y{o}_{k}": f"y{o}_{(k + 1) % n}" for o in range(orbits) for k in range(n)}
        return cls(tuple(sorted(Y)), n, act, p)

    def _check_action(self) -> None:
        n = self.n
        if n < 1:
            raise ConvSpecError("group order must be positive")
        if not 0 <= self.p < n:
            raise ConvSpecError("twist class p must lie in [0, n)")
        if set(self.action) != set(self.Y) or set(self.action.values()) != set(self.Y):
            raise ConvSpecError("the generator must act by a permutation of Y")
        for y in self.Y:
            z = y
            for k in range(1, n + 1):
                z = self.action[z]
                if k < n and z == y:
                    raise ConvSpecError(f"action is not free: a nontrivial element fixes {y}")
            if z != y:
                raise ConvSpecError(f"generator does not have order dividing {n} on {y}")

    def act(self, k: int, y: str) -> str:
        for _ in range(k % self.n):
            y = self.action[y]
        return y

    def orbit(self, y: str) -> list[str]:
        return sorted({self.act(k, y) for k in range(self.n)})

    def section(self) -> list[str]:
        """Least element of every A-orbit on Y."""
        return sorted({self.orbit(y)[0] for y in self.Y})

    def coordinate(self, y: str) -> tuple[int, str]:
        """(k, s) with y = g^k s and s the least element of the orbit of y."""
        s = self.orbit(y)[0]
        for k in range(self.n):
            if self.act(k, s) == y:
                return k, s
        raise AssertionError("unreachable")

    def to_json(self) -> dict:
        out: dict = {"Y": list(self.Y)}
        if self.n is not None:
            out["A"] = {"n": self.n, "action": dict(sorted(self.action.items()))}
            if self.p:
                out["A"]["p"] = self.p
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> ConvCatSpec:
        try:
            Y = tuple(str(y) for y in obj["Y"])
            A = obj.get("A")
            if A is None:
                return cls(Y)
            return cls(Y, int(A["n"]), {str(k): str(v) for k, v in A["action"].items()}, int(A.get("p", 0)))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            if isinstance(exc, ConvSpecError):
                raise
            raise ConvSpecError(f"malformed spec: {exc!r}") from exc

    @classmethod
    def loads(cls, text: str) -> ConvCatSpec:
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ConvSpecError(f"spec is not JSON: {exc}") from exc


def conv_category(spec: ConvCatSpec) -> FusionData:
    """Coh(Y x Y), or Coh_A(Y x Y) with orbit representatives when an action is given.

    With a twist class p the F-symbol of three composable orbits is
    omega_p(k1, k2, k3), where k is the group coordinate of the second entry
    of the representative; p = 0 is the untwisted convolution.
    """
    if spec.n is None:
        Y = spec.Y
        N = {(f"{a}~{b}", f"{b}~{c}", f"{a}~{c}"): 1 for a in Y for b in Y for c in Y}
        C = FusionData.from_entries(N_labels(N), [f"{y}~{y}" for y in Y], N, lambda *args: ONE)
        return C
    n = spec.n
    reps = {}
    for y1 in spec.Y:
        for y2 in spec.Y:
            k, s = spec.coordinate(y1)
            reps[(s, spec.act(-k, y2))] = None
    labels = sorted(f"{a}~{b}" for a, b in reps)
    N = {}
    coord = {}
    for a, b in reps:
        k, s = spec.coordinate(b)
        coord[f"{a}~{b}"] = k
        for c, d in reps:
            if c == s:
                e = spec.act(k, d)
                N[(f"{a}~{b}", f"{c}~{d}", f"{a}~{e}")] = 1
    w = standard_cocycle(n, spec.p)

    def entry(a, b, c, d, e, f):
        return w(coord[a], coord[b], coord[c])

    units = sorted(f"{s}~{s}" for s in spec.section())
    C = FusionData.from_entries(labels, units, N, entry)
    report = pentagon_check(C)
    if not report.ok:
        raise AssertionError(f"convolution category fails the pentagon at {report.violations[0]}")
    return C


def N_labels(N) -> list[str]:
    return sorted({x for key in N for x in key})


@dataclass
class SplitResult:
    model: FusionData
    relabel: dict[str, str]
    gauge: FusionGauge | None


def equivariantization_split(spec: ConvCatSpec, root_bound: int = DEFAULT_ROOT_BOUND) -> SplitResult:
    """Vec_{Z/n}^{omega_p} (x) Coh(Y' x Y') with the label bijection and gauge onto conv_category.

    The orbit of (s, g^k s') with s, s' in the section Y' corresponds to ``k.s~s'``.
    """
    if spec.n is None:
        raise ConvSpecError("equivariantization needs a group action")
    C = conv_category(spec)
    Yp = spec.section()
    model = deligne_product(pointed_category(standard_cocycle(spec.n, spec.p)),
                            conv_category(ConvCatSpec(tuple(Yp))))
    relabel = {}
    for lab in C.simples:
        a, b = lab.split("~")
        k, s = spec.coordinate(b)
        relabel[lab] = f"{k}.{a}~{s}"
    if sorted(relabel.values()) != list(model.simples):
        raise AssertionError("orbit bijection does not hit the model's simples")
    gauge = solve_gauge(C, model, relabel, root_bound)
    return SplitResult(model, relabel, gauge)


def unit_idempotents(C: FusionData) -> list[str]:
    """The unit summands, after checking 1_i (x) 1_j = delta_ij 1_i."""
    for u in C.unit:
        for v in C.unit:
            if C.fuse(u, v) != ((u,) if u == v else ()):
                raise StructureError(f"unit summands {u} and {v} are not orthogonal idempotents")
    return list(C.unit)


def corner_category(C: FusionData, e: str) -> FusionData:
    """Full subcategory on the simples X with e (x) X (x) e = X."""
    if e not in unit_idempotents(C):
        raise StructureError(f"{e} is not a unit summand")
    keep = [x for x in C.simples if C.left_unit(x) == e and C.right_unit(x) == e]
    ks = set(keep)
    N = {k: v for k, v in C.N.items() if set(k) <= ks}
    return FusionData.from_entries(keep, [e], N, C.entry)


def unit_graph(C: FusionData) -> dict[str, set[str]]:
    adj = {u: set() for u in C.unit}
    for x in C.simples:
        i, j = C.left_unit(x), C.right_unit(x)
        adj[i].add(j)
        adj[j].add(i)
    return adj


def indecomposable(C: FusionData) -> bool:
    adj = unit_graph(C)
    start = C.unit[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(C.unit)


def disjoint_union(C1: FusionData, C2: FusionData) -> FusionData:
    """C1 (+) C2 as a multi-fusion category (labels prefixed L: and R:)."""
    lab1 = {a: f"L:{a}" for a in C1.simples}
    lab2 = {a: f"R:{a}" for a in C2.simples}
    N = {(lab1[a], lab1[b], lab1[c]): 1 for (a, b, c) in C1.N}
    N.update({(lab2[a], lab2[b], lab2[c]): 1 for (a, b, c) in C2.N})
    inv = {v: ("L", k) for k, v in lab1.items()}
    inv.update({v: ("R", k) for k, v in lab2.items()})

    def entry(*labels):
        side = inv[labels[0]][0]
        src = C1 if side == "L" else C2
        return src.entry(*(inv[x][1] for x in labels))

    units = [lab1[u] for u in C1.unit] + [lab2[u] for u in C2.unit]
    return FusionData.from_entries(list(lab1.values()) + list(lab2.values()), units, N, entry)


@dataclass
class Reconstruction:
    category: FusionData
    relabel: dict[str, str] | None
    gauge: FusionGauge | None
    gauge_checked: bool


def reconstruct(C: FusionData, e: str, root_bound: int | None = None) -> Reconstruction:
    """Fun_{eCe}(eC, eC) computed from module data, compared with C.

    The fusion rings must be isomorphic; for at most 16 simples the F-symbols
    must also agree up to gauge.
    """
    from .modules import FunctorCategory, module_from_corner
    if not indecomposable(C):
        raise StructureError("category is decomposable: the unit-summand graph is disconnected")
    D, M = module_from_corner(C, e)
    fun = FunctorCategory(M, root_bound).fusion_data()
    relabel = fusion_rings_isomorphic(fun, C)
    if relabel is None:
        raise AssertionError("reconstructed category has a different fusion ring")
    gauge = None
    checked = len(C.simples) <= MAX_GAUGE_SIMPLES
    if checked:
        bound = root_bound or DEFAULT_ROOT_BOUND
        gauge = gauge_equivalent(fun, C, bound)
        if gauge is None:
            raise AssertionError("reconstructed category is not gauge equivalent to the input")
    return Reconstruction(fun, relabel, gauge, checked)
