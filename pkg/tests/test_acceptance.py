"""The ten acceptance criteria, one test each, with a pass/fail line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hecke_oracle import a_values, kl_via_r_polynomials, oracle_group, structure_constants as oracle_h  # noqa: E402
from tcat.center import (canonical_automorphism_order, center_central_data, central_from_commutator,  # noqa: E402
                         check_double_swap, check_unit_identity, commutator_from_central, commutator_violations,
                         drinfeld_center, same_central, same_commutator)
from tcat.cocycles import apply_coboundary, random_gauge, standard_cocycle  # noqa: E402
from tcat.convolution import ConvCatSpec, conv_category, equivariantization_split, reconstruct  # noqa: E402
from tcat.cyclotomic import cyc  # noqa: E402
from tcat.fusion import (classify_rank2, deligne_product, gauge_equivalent, pentagon_check,  # noqa: E402
                         pivotal_structures, pointed_category)
from tcat.hecke import analyze, kl_checks  # noqa: E402
from tcat.modules import endofunctor_category, module_categories, module_equivalent, regular_module  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


class CriterionFailed(AssertionError):
    pass


def require(ok: bool, message: str) -> None:
    if not ok:
        raise CriterionFailed(message)


def c1_center_twists() -> str:
    start = time.perf_counter()
    t0 = Counter(s.theta for s in drinfeld_center(standard_cocycle(2, 0)))
    t1 = Counter(s.theta for s in drinfeld_center(standard_cocycle(2, 1)))
    elapsed = time.perf_counter() - start
    require(t0 == Counter({cyc(1): 3, -cyc(1): 1}), f"p=0 twists {dict(t0)}")
    require(t1 == Counter({cyc(1): 2, cyc(4): 1, cyc(4, 3): 1}), f"p=1 twists {dict(t1)}")
    require(elapsed < 1.0, f"runtime {elapsed:.2f}s")
    return f"{{1,1,1,-1}} and {{1,1,i,-i}} in {elapsed:.3f}s"


def c2_order_invariant() -> str:
    rng = random.Random(20240)
    for p, expected in ((0, 2), (1, 4)):
        w = standard_cocycle(2, p)
        require(canonical_automorphism_order(w, "1") == expected, f"p={p}")
        for _ in range(10):
            w2 = apply_coboundary(w, random_gauge(2, rng, 8))
            require(canonical_automorphism_order(w2, "1") == expected, f"p={p} after gauge")
    return "orders 2 and 4, stable under 10 random gauges each"


def c3_rank2() -> str:
    classes = classify_rank2(8)
    vec = pointed_category(standard_cocycle(2, 0))
    vecw = pointed_category(standard_cocycle(2, 1))
    require(len(classes) == 2, f"{len(classes)} classes")
    require(any(gauge_equivalent(C, vec, 8) for C in classes), "no class equivalent to Vec")
    require(any(gauge_equivalent(C, vecw, 8) for C in classes), "no class equivalent to Vec^omega")
    require(gauge_equivalent(vec, vecw, 8) is None, "Vec equivalent to Vec^omega")
    return "2 classes; gauge_equivalent(Vec, Vec^omega) = none"


def c4_pentagon() -> str:
    count = 0
    for n in range(1, 5):
        for p in range(n):
            require(pentagon_check(pointed_category(standard_cocycle(n, p))).ok, f"(n,p)=({n},{p})")
            count += 1
    from tcat.fusion import FusionData
    C = pointed_category(standard_cocycle(2, 1))
    bad = FusionData.from_entries(C.simples, C.unit, C.N,
                                  lambda a, b, c, d, e, f: cyc(4) if (a, b, c) == ("1", "1", "1") else C.entry(a, b, c, d, e, f))
    report = pentagon_check(bad)
    require(not report.ok and len(report.violations[0]) == 5, "corruption not detected")
    return f"{count} pointed categories pass; corrupted witness {report.violations[0]}"


def c5_modules() -> str:
    vecw = pointed_category(standard_cocycle(2, 1))
    vec = pointed_category(standard_cocycle(2, 0))
    mw = module_categories(vecw, 2, 8)
    mv = module_categories(vec, 2, 8)
    require(len(mw.solutions) == 1 and module_equivalent(mw.solutions[0], regular_module(vecw)),
            f"Vec^omega: {len(mw.solutions)} classes")
    require(len(mv.solutions) == 2, f"Vec: {len(mv.solutions)} classes")
    require(mw.complete and mv.complete, "search incomplete")
    return "Vec^omega: 1 (regular); Vec: 2; ranks <= 2, scalars in mu_8"


def c6_reconstruction() -> str:
    start = time.perf_counter()
    C = pointed_category(standard_cocycle(2, 1))
    for k in (1, 2):
        fun = endofunctor_category(C, regular_module(C), k)
        model = deligne_product(C, conv_category(ConvCatSpec.plain(k)))
        require(gauge_equivalent(fun, model, 8) is not None, f"|Y'|={k}")
    for k in (1, 2, 3):
        D = conv_category(ConvCatSpec.plain(k))
        for e in D.unit:
            require(reconstruct(D, e).relabel is not None, f"Coh |Y|={k} at {e}")
    elapsed = time.perf_counter() - start
    require(elapsed < 30.0, f"runtime {elapsed:.2f}s")
    return f"|Y'| in {{1,2}} and |Y| <= 3 in {elapsed:.2f}s"


def _free_involutions(size: int):
    Y = [f"y{i}" for i in range(size)]

    def matchings(items):
        if not items:
            yield []
            return
        for i in range(1, len(items)):
            for m in matchings(items[1:i] + items[i + 1:]):
                yield [(items[0], items[i])] + m

    for m in matchings(Y):
        action = {}
        for a, b in m:
            action[a], action[b] = b, a
        yield ConvCatSpec(tuple(Y), 2, action)


def c7_equivariantization() -> str:
    total = 0
    for size in (2, 4, 6):
        for spec in _free_involutions(size):
            require(equivariantization_split(spec).gauge is not None, f"action {dict(spec.action)}")
            total += 1
    return f"{total} free Z/2 actions split"


def c8_commutator() -> str:
    checked = 0
    for p in (0, 1):
        w = standard_cocycle(2, p)
        c = center_central_data(w)
        for P in pivotal_structures(pointed_category(w)):
            k = commutator_from_central(c, pivotal=P)
            require(check_unit_identity(k), f"p={p}: u_(X,1) != id")
            require(not commutator_violations(k), f"p={p}: coherence")
            require(check_double_swap(k), f"p={p}: double swap")
            back = central_from_commutator(k, pivotal=P)
            require(same_central(back, c), f"p={p}: central round trip")
            require(same_commutator(commutator_from_central(back, pivotal=P), k), f"p={p}: commutator round trip")
            checked += 1
    return f"{checked} (p, pivotal) combinations"


def c9_hecke() -> str:
    start = time.perf_counter()
    expected = {"A2": {0, 1, 3}, "A3": {0, 1, 2, 3, 6}, "G2": {0, 1, 6}, "B2": {0, 1, 4}}
    for name in ("A2", "A3", "B2", "G2"):
        H = analyze(name)
        W = H.W
        for check, ok, wit in kl_checks(H.kl) + H.J.checks:
            require(ok, f"{name}: {check} {wit}")
        require(any(c.startswith("J associative (exhaustive") for c, _, _ in H.J.checks), f"{name}: sampled J")
        G = oracle_group(name)
        oracle = a_values(G, oracle_h(G, kl_via_r_polynomials(G)))
        mine = [H.cells.a[w] for w in range(W.order)]
        require(mine == [oracle[G.from_word(W.words[w])] for w in range(W.order)], f"{name}: a-values")
        require(set(mine) == expected[name], f"{name}: {sorted(set(mine))}")
    elapsed = time.perf_counter() - start
    require(elapsed < 60.0, f"runtime {elapsed:.2f}s")
    return f"A2, A3, B2, G2 agree with the oracle in {elapsed:.2f}s"


def c10_determinism(tmp_dir: Path) -> str:
    spec = tmp_dir / "spec.json"
    spec.write_text('{"Y": ["a", "b", "c", "d"], "A": {"n": 2, "action": {"a": "b", "b": "a", "c": "d", "d": "c"}}}')
    cat = tmp_dir / "cat.json"
    cat.write_text(pointed_category(standard_cocycle(3, 1)).dumps())
    commands = [
        ["pentagon", "--input", str(cat)],
        ["classify-rank2"],
        ["center", "--n", "3", "--p", "1"],
        ["ind-order", "--n", "2", "--p", "1", "--simple", "1"],
        ["convcat", "--spec", str(spec), "--split", "--reconstruct", "a~a"],
        ["modcats", "--n", "2", "--p", "0", "--max-rank", "2"],
        ["cells", "--type", "B2"],
        ["jring", "--type", "B2", "--cell-index", "1", "--corner", "s1"],
        ["verify-theorem-model", "--yprime", "2"],
    ]
    env = dict(os.environ)
    for argv in commands:
        for flag in ([], ["--json"]):
            outs = []
            for seed in ("0", "12345"):
                env["PYTHONHASHSEED"] = seed
                proc = subprocess.run([sys.executable, "-m", "tcat.cli", *argv, *flag],
                                      capture_output=True, env=env, check=False)
                require(proc.returncode == 0, f"{' '.join(argv)} exited {proc.returncode}")
                outs.append(proc.stdout)
            require(outs[0] == outs[1], f"{' '.join(argv + flag)} differs between runs")
    return f"{len(commands)} subcommands x (text, json) byte-identical"


CRITERIA = {
    1: ("center twists", c1_center_twists),
    2: ("order invariant", c2_order_invariant),
    3: ("rank-2 classification", c3_rank2),
    4: ("pentagon suites", c4_pentagon),
    5: ("module categories", c5_modules),
    6: ("reconstruction", c6_reconstruction),
    7: ("equivariantization", c7_equivariantization),
    8: ("commutator coherence", c8_commutator),
    9: ("Hecke cells", c9_hecke),
    10: ("determinism", c10_determinism),
}


def run_criterion(number: int, tmp_dir: Path | None = None) -> tuple[bool, str]:
    name, fn = CRITERIA[number]
    try:
        detail = fn(tmp_dir) if number == 10 else fn()
        result = (True, detail)
    except CriterionFailed as exc:
        result = (False, str(exc))
    RESULTS[number] = result
    return result


def format_line(number: int, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] C{number} {CRITERIA[number][0]}: {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, tmp_path):
    ok, detail = run_criterion(number, tmp_path)
    print(format_line(number, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    import tempfile
    failed = 0
    with tempfile.TemporaryDirectory() as tmp:
        for number in sorted(CRITERIA):
            ok, detail = run_criterion(number, Path(tmp))
            failed += not ok
            print(format_line(number, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
