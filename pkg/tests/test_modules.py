from __future__ import annotations

import pytest

from tcat.cocycles import Cocycle3, cohomologous, standard_cocycle
from tcat.convolution import ConvCatSpec, conv_category, corner_category
from tcat.fusion import deligne_product, gauge_equivalent, pentagon_check, pointed_category
from tcat.modules import (ModuleError, UnsupportedCategory, direct_sum, endofunctor_category,
                          mixed_pentagon_violations, module_categories, module_equivalent, regular_module,
                          transitive_actions)


def subgroup_oracle(n: int, p: int) -> list[int]:
    """Ranks n/d for subgroups of order d on which omega_p restricts to a coboundary."""
    w = standard_cocycle(n, p)
    ranks = []
    for d in range(1, n + 1):
        if n % d:
            continue
        m = n // d
        restricted = Cocycle3.from_function(d, lambda a, b, c: w(m * a, m * b, m * c))
        if cohomologous(restricted, Cocycle3.trivial(d), 4 * n * n) is not None:
            ranks.append(n // d)
    return sorted(ranks)


@pytest.mark.parametrize("n,p,max_rank", [(2, 0, 2), (2, 1, 2), (3, 0, 3)])
def test_module_counts_match_subgroup_oracle(n, p, max_rank):
    C = pointed_category(standard_cocycle(n, p))
    res = module_categories(C, max_rank)
    assert res.complete
    assert sorted(M.rank for M in res.solutions) == subgroup_oracle(n, p)
    for M in res.solutions:
        assert not mixed_pentagon_violations(M) and M.indecomposable


def test_vec_omega_has_only_the_regular_module():
    C = pointed_category(standard_cocycle(2, 1))
    res = module_categories(C, 2)
    assert len(res.solutions) == 1
    assert module_equivalent(res.solutions[0], regular_module(C))
    (ob,) = res.obstructions
    assert ob.rank == 1 and ob.witness is not None


def test_vec_z2_has_two_classes():
    C = pointed_category(standard_cocycle(2, 0))
    res = module_categories(C, 2)
    assert sorted(M.rank for M in res.solutions) == [1, 2]
    assert not res.obstructions


def test_transitive_actions():
    C = pointed_category(standard_cocycle(3, 0))
    assert [len({m for _, m in a}) for r in (1, 2, 3) for a in transitive_actions(C, r)] == [1, 3]


def test_module_equivalence_is_not_trivial():
    C = pointed_category(standard_cocycle(2, 0))
    res = module_categories(C, 2)
    r1, r2 = sorted(res.solutions, key=lambda M: M.rank)
    assert not module_equivalent(r1, r2)
    assert module_equivalent(r2, regular_module(C))


def test_restrictions():
    with pytest.raises(UnsupportedCategory):
        module_categories(pointed_category(standard_cocycle(4, 1)), 2)
    with pytest.raises(UnsupportedCategory):
        module_categories(pointed_category(standard_cocycle(2, 1)), 4)
    with pytest.raises(ModuleError):
        direct_sum(regular_module(pointed_category(standard_cocycle(2, 1))), 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_endofunctors_of_the_regular_module(k):
    C = pointed_category(standard_cocycle(2, 1))
    fun = endofunctor_category(C, regular_module(C), k)
    assert len(fun.simples) == 2 * k * k and len(fun.unit) == k
    assert pentagon_check(fun).ok
    model = deligne_product(C, conv_category(ConvCatSpec.plain(k)))
    assert gauge_equivalent(fun, model, 8) is not None
    for e in fun.unit:
        assert gauge_equivalent(corner_category(fun, e), C, 8) is not None


def test_endofunctors_of_vec_z2_modules():
    C = pointed_category(standard_cocycle(2, 0))
    rank1 = next(M for M in module_categories(C, 1).solutions)
    # the dual of Vec_Z2 with respect to Vec is Rep(Z/2), again pointed of rank 2
    fun = endofunctor_category(C, rank1)
    assert len(fun.simples) == 2
    assert gauge_equivalent(fun, C, 8) is not None
