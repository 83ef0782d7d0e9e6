"""Skeletal multi-fusion categories given by fusion rules and F-symbols.

Conventions
-----------
Simple labels are opaque strings, always kept in sorted order.  For an
admissible quadruple ``(a, b, c, d)`` the F-symbol is a matrix whose rows are
the intermediate labels ``e`` of the paths ``(a b) c -> e c -> d`` and whose
columns are the intermediate labels ``f`` of ``a (b c) -> a f -> d``, both
sorted.  The unit is strict: every F-symbol touching a unit summand is 1.

Only multiplicity-free categories (all ``N^c_ab <= 1``) are supported.

Gauge transformations act by one invertible scalar ``u(a, b; c)`` per fusion
vertex::

    F'[e, f] = F[e, f] * u(b, c; f) * u(a, f; d) / (u(a, b; e) * u(e, c; d))

which on a pointed category is exactly the coboundary action on cocycles.
"""
from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping

from .cocycles import Cocycle3, is_cocycle
from .cyclotomic import ONE, ZERO, CycNumber, cyc, order_lcm, root_of_unity_exponent
from .linmod import LinearSystem, iter_solutions

DEFAULT_ROOT_BOUND = 8

Quad = tuple[str, str, str, str]
Matrix = tuple[tuple[CycNumber, ...], ...]

_LABEL = re.compile(r"[^,()\s\"]+")


class StructureError(ValueError):
    """Malformed category data (as opposed to a failed coherence check)."""


class FusionData:
    """A skeletal, strictly unital, multiplicity-free multi-fusion category."""

    def __init__(self, simples: Iterable[str], unit: Iterable[str],
                 N: Mapping[tuple[str, str, str], int],
                 F: Mapping[Quad, Matrix], *, validate: bool = True):
        self.simples: tuple[str, ...] = tuple(sorted(set(simples)))
        self.unit: tuple[str, ...] = tuple(sorted(set(unit)))
        for s in self.simples:
            if not _LABEL.fullmatch(s):
                raise StructureError(f"illegal simple label {s!r}")
        known = set(self.simples)
        self._fuse: dict[tuple[str, str], tuple[str, ...]] = {}
        nn: dict[tuple[str, str, str], int] = {}
        for (a, b, c), m in N.items():
            if m == 0:
                continue
            if not {a, b, c} <= known:
                raise StructureError(f"fusion rule ({a},{b},{c}) uses an unknown label")
            if m != 1:
                raise StructureError(f"multiplicity {m} at ({a},{b},{c}); only multiplicity-free data is supported")
            nn[(a, b, c)] = 1
        self.N = nn
        outs: dict[tuple[str, str], list[str]] = {}
        for a, b, c in nn:
            outs.setdefault((a, b), []).append(c)
        self._fuse = {k: tuple(sorted(v)) for k, v in outs.items()}
        self.F: dict[Quad, Matrix] = {}
        for quad, mat in F.items():
            self.F[quad] = tuple(tuple(CycNumber.coerce(x) for x in row) for row in mat)
        if not set(self.unit) <= known:
            raise StructureError("unit summand is not a simple")
        self._check_shapes()
        if validate:
            self.validate()

    # fusion ring -------------------------------------------------------------
    def fuse(self, a: str, b: str) -> tuple[str, ...]:
        return self._fuse.get((a, b), ())

    def mult(self, a: str, b: str, c: str) -> int:
        return self.N.get((a, b, c), 0)

    def rows(self, a, b, c, d) -> tuple[str, ...]:
        return tuple(e for e in self.fuse(a, b) if self.mult(e, c, d))

    def cols(self, a, b, c, d) -> tuple[str, ...]:
        return tuple(f for f in self.fuse(b, c) if self.mult(a, f, d))

    def admissible(self) -> Iterator[Quad]:
        for a, b, c in itertools.product(self.simples, repeat=3):
            targets = set()
            for e in self.fuse(a, b):
                targets.update(self.fuse(e, c))
            for d in sorted(targets):
                yield (a, b, c, d)

    def entry(self, a, b, c, d, e, f) -> CycNumber:
        mat = self.F.get((a, b, c, d))
        if mat is None:
            return ZERO
        r, s = self.rows(a, b, c, d), self.cols(a, b, c, d)
        if e not in r or f not in s:
            return ZERO
        return mat[r.index(e)][s.index(f)]

    def vertices(self) -> list[tuple[str, str, str]]:
        return sorted(self.N)

    def left_unit(self, a: str) -> str:
        return next(u for u in self.unit if self.mult(u, a, a))

    def right_unit(self, a: str) -> str:
        return next(u for u in self.unit if self.mult(a, u, a))

    def dual(self, a: str) -> str:
        for b in self.simples:
            if any(self.mult(a, b, u) for u in self.unit) and any(self.mult(b, a, u) for u in self.unit):
                return b
        raise StructureError(f"simple {a} has no dual")

    def is_invertible(self) -> bool:
        """Every product of simples is zero or a single simple, and every simple is invertible."""
        if any(len(v) > 1 for v in self._fuse.values()):
            return False
        for a in self.simples:
            b = self.dual(a)
            if len(self.fuse(a, b)) != 1 or len(self.fuse(b, a)) != 1:
                return False
        return True

    def omega(self, a: str, b: str, c: str) -> CycNumber:
        """The scalar associator of three simples in an invertible category."""
        (e,) = self.fuse(a, b)
        (f,) = self.fuse(b, c)
        (d,) = self.fuse(e, c)
        return self.entry(a, b, c, d, e, f)

    def conductor(self) -> int:
        n = 1
        for mat in self.F.values():
            for row in mat:
                for x in row:
                    n = n * x.conductor // math.gcd(n, x.conductor)
        return n

    def nonzero_values(self) -> list[CycNumber]:
        return [x for mat in self.F.values() for row in mat for x in row if not x.is_zero()]

    # validation ----------------------------------------------------------------
    def _check_shapes(self) -> None:
        adm = set(self.admissible())
        for quad in adm:
            if quad not in self.F:
                raise StructureError(f"missing F-symbol for {quad}")
            r, s = self.rows(*quad), self.cols(*quad)
            mat = self.F[quad]
            if len(r) != len(s):
                raise StructureError(f"fusion ring is not associative at {quad}")
            if len(mat) != len(r) or any(len(row) != len(s) for row in mat):
                raise StructureError(f"F-symbol {quad} has shape mismatching its fusion paths")
        extra = set(self.F) - adm
        if extra:
            raise StructureError(f"F-symbols given for inadmissible quadruples {sorted(extra)[:3]}")

    def validate(self) -> None:
        """Unit axiom, orthogonal unit summands, ring-level rigidity, strict-unit F-symbols."""
        if not self.unit:
            raise StructureError("no unit summand")
        for u in self.unit:
            for v in self.unit:
                want = (u,) if u == v else ()
                if self.fuse(u, v) != want:
                    raise StructureError(f"unit summands {u},{v} are not orthogonal idempotents")
        for a in self.simples:
            for b in self.simples:
                left = sum(self.mult(u, a, b) for u in self.unit)
                right = sum(self.mult(a, u, b) for u in self.unit)
                if left != (a == b) or right != (a == b):
                    raise StructureError(f"unit axiom fails for ({a},{b})")
        for a in self.simples:
            hits = [(b, u) for b in self.simples for u in self.unit if self.mult(a, b, u)]
            if len(hits) != 1:
                raise StructureError(f"simple {a} does not have a unique dual")
        for quad in self.admissible():
            if set(quad[:3]) & set(self.unit):
                mat = self.F[quad]
                if len(mat) != 1 or mat[0][0] != 1:
                    raise StructureError(f"F-symbol {quad} touches the unit but is not 1")

    # equality and relabeling -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionData):
            return NotImplemented
        return (self.simples == other.simples and self.unit == other.unit
                and self.N == other.N and self.F == other.F)

    def __repr__(self) -> str:
        return f"FusionData(simples={list(self.simples)}, unit={list(self.unit)})"

    def relabel(self, mapping: Mapping[str, str]) -> FusionData:
        m = dict(mapping)
        inv = {v: k for k, v in m.items()}
        N = {(m[a], m[b], m[c]): v for (a, b, c), v in self.N.items()}

        def entry(a, b, c, d, e, f):
            return self.entry(inv[a], inv[b], inv[c], inv[d], inv[e], inv[f])

        return FusionData.from_entries([m[s] for s in self.simples], [m[u] for u in self.unit], N, entry)

    @classmethod
    def from_entries(cls, simples, unit, N, entry: Callable[..., CycNumber], *,
                     validate: bool = True) -> FusionData:
        """Build the F-matrices from an entry function ``entry(a, b, c, d, e, f)``."""
        skeleton = _Skeleton(simples, N)
        F = {}
        for quad in skeleton.admissible():
            r, s = skeleton.rows(*quad), skeleton.cols(*quad)
            F[quad] = tuple(tuple(CycNumber.coerce(entry(*quad, e, f)) for f in s) for e in r)
        return cls(simples, unit, N, F, validate=validate)

    # serialization -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "simples": list(self.simples),
            "unit": list(self.unit),
            "N": {f"({a},{b},{c})": m for (a, b, c), m in sorted(self.N.items())},
            "F": {f"({a},{b},{c},{d})": [[x.to_json() for x in row] for row in mat]
                  for (a, b, c, d), mat in sorted(self.F.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Mapping, *, validate: bool = True) -> FusionData:
        try:
            simples = [str(s) for s in obj["simples"]]
            unit = [str(s) for s in obj["unit"]]
            N = {_parse_key(k, 3): int(v) for k, v in obj["N"].items()}
            F = {_parse_key(k, 4): [[CycNumber.from_json(x) for x in row] for row in mat]
                 for k, mat in obj["F"].items()}
        except (KeyError, TypeError, AttributeError) as exc:
            raise StructureError(f"malformed category file: {exc!r}") from exc
        return cls(simples, unit, N, F, validate=validate)


class _Skeleton:
    """Fusion rules alone, enough to enumerate admissible quadruples and paths."""

    def __init__(self, simples, N):
        self.simples = tuple(sorted(set(simples)))
        self.N = {k: v for k, v in N.items() if v}
        outs: dict = {}
        for a, b, c in self.N:
            outs.setdefault((a, b), []).append(c)
        self._fuse = {k: tuple(sorted(v)) for k, v in outs.items()}

    fuse = FusionData.fuse
    mult = FusionData.mult
    rows = FusionData.rows
    cols = FusionData.cols
    admissible = FusionData.admissible


def _parse_key(key: str, arity: int) -> tuple[str, ...]:
    m = re.fullmatch(r"\((.*)\)", key.strip())
    if not m:
        raise StructureError(f"malformed key {key!r}")
    parts = tuple(p.strip() for p in m.group(1).split(","))
    if len(parts) != arity or not all(parts):
        raise StructureError(f"key {key!r} should have {arity} labels")
    return parts


# constructors ---------------------------------------------------------------------

def group_labels(n: int) -> list[str]:
    return [str(a) for a in range(n)]


def pointed_category(w: Cocycle3) -> FusionData:
    """Vec_{Z/n}^omega: simples are group elements, F(a, b, c) = omega(a, b, c)."""
    ok, bad = is_cocycle(w)
    if not ok:
        raise StructureError(f"not a 3-cocycle; first violation at {bad[0]}")
    n = w.n
    N = {(str(a), str(b), str((a + b) % n)): 1 for a in range(n) for b in range(n)}
    C = FusionData.from_entries(group_labels(n), ["0"], N,
                                lambda a, b, c, d, e, f: w(int(a), int(b), int(c)))
    assert pentagon_check(C).ok
    return C


def vec() -> FusionData:
    return FusionData(["1"], ["1"], {("1", "1", "1"): 1}, {("1", "1", "1", "1"): ((ONE,),)})


def deligne_product(C1: FusionData, C2: FusionData) -> FusionData:
    """Simples are pairs ``a.b``; multiplicities multiply, F-symbols multiply entrywise."""
    pair = {(a, b): f"{a}.{b}" for a in C1.simples for b in C2.simples}
    split = {v: k for k, v in pair.items()}
    N = {}
    for (a1, b1, c1) in C1.N:
        for (a2, b2, c2) in C2.N:
            N[(pair[a1, a2], pair[b1, b2], pair[c1, c2])] = 1

    def entry(a, b, c, d, e, f):
        (a1, a2), (b1, b2), (c1, c2), (d1, d2), (e1, e2), (f1, f2) = (
            split[a], split[b], split[c], split[d], split[e], split[f])
        return C1.entry(a1, b1, c1, d1, e1, f1) * C2.entry(a2, b2, c2, d2, e2, f2)

    units = [pair[u1, u2] for u1 in C1.unit for u2 in C2.unit]
    out = FusionData.from_entries(pair.values(), units, N, entry)
    report = pentagon_check(out)
    if not report.ok:
        raise AssertionError(f"Deligne product fails the pentagon at {report.violations[0]}")
    return out


# pentagon ---------------------------------------------------------------------------

@dataclass
class PentagonReport:
    ok: bool
    instances: int
    violations: list[tuple[str, str, str, str, str]] = field(default_factory=list)


def pentagon_check(C: FusionData, max_violations: int | None = None) -> PentagonReport:
    """Exhaustive pentagon verification over all 5-tuples (a, b, c, d, e).

    Quintuples whose outer fusion space is empty hold vacuously and are
    counted; structural problems surface as :class:`StructureError` when
    the category is constructed, never as violations here.
    """
    bad: list = []
    seen = set()
    fuse, mult, entry = C.fuse, C.mult, C.entry
    for a, b, c, d in itertools.product(C.simples, repeat=4):
        for f in fuse(a, b):
            for g in fuse(f, c):
                for e in fuse(g, d):
                    if (a, b, c, d, e) in seen:
                        continue
                    for l in fuse(c, d):
                        lhs_path = mult(f, l, e)
                        for k in fuse(b, l):
                            if not mult(a, k, e):
                                continue
                            lhs = entry(f, c, d, e, g, l) * entry(a, b, l, e, f, k) if lhs_path else ZERO
                            rhs = ZERO
                            for h in fuse(b, c):
                                if mult(a, h, g) and mult(h, d, k):
                                    rhs = rhs + entry(a, b, c, g, f, h) * entry(a, h, d, e, g, k) * entry(b, c, d, k, h, l)
                            if lhs != rhs:
                                seen.add((a, b, c, d, e))
                                bad.append((a, b, c, d, e))
                                break
                        if (a, b, c, d, e) in seen:
                            break
                    if max_violations is not None and len(bad) >= max_violations:
                        return PentagonReport(False, len(C.simples) ** 5, bad)
    return PentagonReport(not bad, len(C.simples) ** 5, bad)


# gauge equivalence -------------------------------------------------------------------

@dataclass(frozen=True)
class FusionGauge:
    """A relabeling of simples together with a vertex gauge on the source."""

    relabel: Mapping[str, str]
    vertex: Mapping[tuple[str, str, str], CycNumber]

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.relabel.items()) and all(x == 1 for x in self.vertex.values())


def apply_gauge(C: FusionData, gauge: FusionGauge) -> FusionData:
    m = dict(gauge.relabel)
    inv = {v: k for k, v in m.items()}
    u = gauge.vertex

    def g(x, y, z):
        return u.get((x, y, z), ONE)

    N = {(m[a], m[b], m[c]): v for (a, b, c), v in C.N.items()}

    def entry(A, B, Cc, D, E, Fv):
        a, b, c, d, e, f = (inv[x] for x in (A, B, Cc, D, E, Fv))
        base = C.entry(a, b, c, d, e, f)
        if base.is_zero():
            return base
        return base * g(b, c, f) * g(a, f, d) / (g(a, b, e) * g(e, c, d))

    return FusionData.from_entries([m[s] for s in C.simples], [m[x] for x in C.unit], N, entry)


def _signature(C: FusionData, a: str) -> tuple:
    return (a in C.unit,
            sum(1 for b in C.simples if C.fuse(a, b)),
            sum(1 for b in C.simples if C.fuse(b, a)),
            tuple(sorted(len(C.fuse(a, b)) for b in C.simples)),
            any(C.mult(a, a, u) for u in C.unit))


def ring_isomorphisms(C1: FusionData, C2: FusionData) -> Iterator[dict[str, str]]:
    """Label bijections preserving units and fusion multiplicities (backtracking)."""
    if len(C1.simples) != len(C2.simples) or len(C1.unit) != len(C2.unit) or len(C1.N) != len(C2.N):
        return
    sig1 = {a: _signature(C1, a) for a in C1.simples}
    sig2 = {a: _signature(C2, a) for a in C2.simples}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return
    order = sorted(C1.simples, key=lambda a: (a not in C1.unit, a))
    assign: dict[str, str] = {}
    used: set[str] = set()

    def consistent(x: str) -> bool:
        px = assign[x]
        for y, py in assign.items():
            for p, q in ((x, y), (y, x)):
                pp, qq = assign[p], assign[q]
                outs1 = C1.fuse(p, q)
                if len(outs1) != len(C2.fuse(pp, qq)):
                    return False
                for z in outs1:
                    if z in assign and not C2.mult(pp, qq, assign[z]):
                        return False
        # products landing on x
        for p, pp in assign.items():
            for q, qq in assign.items():
                if C1.mult(p, q, x) != C2.mult(pp, qq, px):
                    return False
        return True

    def rec(i: int):
        if i == len(order):
            yield dict(assign)
            return
        x = order[i]
        for cand in C2.simples:
            if cand in used or sig2[cand] != sig1[x]:
                continue
            assign[x] = cand
            used.add(cand)
            if consistent(x):
                yield from rec(i + 1)
            del assign[x]
            used.discard(cand)

    yield from rec(0)


def solve_gauge(C1: FusionData, C2: FusionData, relabel: Mapping[str, str],
                root_bound: int = DEFAULT_ROOT_BOUND) -> FusionGauge | None:
    """Vertex gauge with values in mu_root_bound carrying relabel(C1) onto C2, if any."""
    L = root_bound
    m = relabel
    system = LinearSystem()
    for v in C1.vertices():
        system.var(v)
    for quad in C1.admissible():
        a, b, c, d = quad
        for e in C1.rows(*quad):
            for f in C1.cols(*quad):
                x1 = C1.entry(a, b, c, d, e, f)
                x2 = C2.entry(m[a], m[b], m[c], m[d], m[e], m[f])
                if x1.is_zero() or x2.is_zero():
                    if x1.is_zero() != x2.is_zero():
                        return None
                    continue
                k = root_of_unity_exponent(x2 / x1, L)
                if k is None:
                    return None
                terms: dict = {}
                for key, s in (((b, c, f), 1), ((a, f, d), 1), ((a, b, e), -1), ((e, c, d), -1)):
                    terms[key] = terms.get(key, 0) + s
                system.add(terms, k)
    sol = system.solve(L)
    if sol is None:
        return None
    gauge = FusionGauge(dict(m), {v: cyc(L, x) for v, x in sol.items()})
    if apply_gauge(C1, gauge) != C2:
        raise AssertionError("gauge solution does not reproduce the target category")
    return gauge


def gauge_equivalent(C1: FusionData, C2: FusionData,
                     root_bound: int = DEFAULT_ROOT_BOUND) -> FusionGauge | None:
    """Search ring isomorphisms, then vertex gauges over mu_root_bound."""
    if root_bound < 1:
        raise ValueError(f"root_bound must be >= 1, got {root_bound}")
    for relabel in ring_isomorphisms(C1, C2):
        g = solve_gauge(C1, C2, relabel, root_bound)
        if g is not None:
            return g
    return None


def fusion_rings_isomorphic(C1: FusionData, C2: FusionData) -> dict[str, str] | None:
    return next(ring_isomorphisms(C1, C2), None)


# rank-two classification ----------------------------------------------------------------

def z2_category(x: CycNumber) -> FusionData:
    """The Z/2 fusion ring with F(1,1,1) = x and every other F-symbol 1."""
    N = {(str(a), str(b), str((a + b) % 2)): 1 for a in range(2) for b in range(2)}

    def entry(a, b, c, d, e, f):
        return x if (a, b, c) == ("1", "1", "1") else ONE

    return FusionData.from_entries(["0", "1"], ["0"], N, entry)


def classify_rank2(root_bound: int = DEFAULT_ROOT_BOUND) -> list[FusionData]:
    """Gauge classes of strictly unital pentagon solutions on the Z/2 fusion ring.

    The free datum is F(delta, delta, delta), searched over mu_root_bound.
    """
    solutions = []
    for k in range(root_bound):
        C = z2_category(cyc(root_bound, k))
        if pentagon_check(C).ok:
            solutions.append(C)
    classes: list[FusionData] = []
    for C in solutions:
        if not any(gauge_equivalent(C, R, root_bound) is not None for R in classes):
            classes.append(C)
    return classes


# pivotal structures ------------------------------------------------------------------------

@dataclass(frozen=True)
class PivotalStructure:
    """Scalars t(a) of a monoidal isomorphism Id -> (double dual) on simples."""

    t: Mapping[str, CycNumber]
    left_dims: Mapping[str, CycNumber]
    right_dims: Mapping[str, CycNumber]

    @property
    def spherical(self) -> bool:
        return all(self.left_dims[a] == self.right_dims[a] for a in self.t)


def _require_invertible(C: FusionData) -> None:
    if not C.is_invertible():
        raise NotImplementedError("pivotal data is implemented for categories whose simples are all invertible")


def duality_scalars(C: FusionData) -> dict[str, CycNumber]:
    """ev_a : a* (x) a -> 1 with coev_a = 1; zig-zag forces ev_a = omega(a, a*, a)^-1."""
    _require_invertible(C)
    return {a: C.omega(a, C.dual(a), a).inv() for a in C.simples}


def double_dual_tensor_structure(C: FusionData) -> dict[tuple[str, str], CycNumber]:
    """Scalars J(a, b) of the tensor structure a** (x) b** -> (a (x) b)** for composable a, b."""
    ev = duality_scalars(C)
    dual = {a: C.dual(a) for a in C.simples}

    def gamma(x, y):
        # canonical y* (x) x* -> (x (x) y)*
        (xy,) = C.fuse(x, y)
        return (C.omega(dual[y], dual[x], xy) / C.omega(dual[x], x, y)) * ev[x] * ev[y] / ev[xy]

    out = {}
    for a in C.simples:
        for b in C.simples:
            if C.fuse(a, b):
                out[(a, b)] = gamma(dual[b], dual[a]) / gamma(a, b)
    return out


def pivotal_dimensions(C: FusionData, t: Mapping[str, CycNumber]):
    dual = {a: C.dual(a) for a in C.simples}
    left = {a: t[a] / C.omega(dual[a], a, dual[a]) for a in C.simples}
    right = {a: t[a].inv() / C.omega(a, dual[a], a) for a in C.simples}
    return left, right


def is_pivotal(C: FusionData, t: Mapping[str, CycNumber]) -> bool:
    J = double_dual_tensor_structure(C)
    for (a, b), j in J.items():
        (ab,) = C.fuse(a, b)
        if t[ab] != j * t[a] * t[b]:
            return False
    return True


def default_root_bound(C: FusionData) -> int:
    base = math.lcm(DEFAULT_ROOT_BOUND, len(C.simples))
    return math.lcm(base, order_lcm(C.nonzero_values()))


def pivotal_structures(C: FusionData, root_bound: int | None = None) -> list[PivotalStructure]:
    """All pivotal structures with values in mu_root_bound, each flagged spherical or not."""
    _require_invertible(C)
    L = root_bound or default_root_bound(C)
    J = double_dual_tensor_structure(C)
    system = LinearSystem()
    for a in C.simples:
        system.var(a)
    for (a, b), j in sorted(J.items()):
        k = root_of_unity_exponent(j, L)
        if k is None:
            return []
        (ab,) = C.fuse(a, b)
        terms: dict = {}
        for key, s in ((ab, 1), (a, -1), (b, -1)):
            terms[key] = terms.get(key, 0) + s
        system.add(terms, k)
    keys = list(system.index)
    out = []
    for x in iter_solutions(system.matrix(), [r % L for r in system.rhs], L, cols=len(keys)):
        t = {keys[i]: cyc(L, x[i]) for i in range(len(keys))}
        assert is_pivotal(C, t)
        left, right = pivotal_dimensions(C, t)
        out.append(PivotalStructure(t, left, right))
    out.sort(key=lambda p: tuple(p.t[a].root_exponent() for a in C.simples))
    return out


def unit_dimension_pivotal(C: FusionData) -> PivotalStructure:
    """The pivotal structure with every left and right dimension equal to 1."""
    dual = {a: C.dual(a) for a in C.simples}
    t = {a: C.omega(dual[a], a, dual[a]) for a in C.simples}
    if not is_pivotal(C, t):
        raise AssertionError("the dimension-one pivotal candidate is not monoidal")
    left, right = pivotal_dimensions(C, t)
    return PivotalStructure(t, left, right)
