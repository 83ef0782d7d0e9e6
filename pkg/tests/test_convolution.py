from __future__ import annotations

import json

import pytest

from tcat.cocycles import standard_cocycle
from tcat.convolution import (ConvCatSpec, ConvSpecError, conv_category, corner_category, disjoint_union,
                              equivariantization_split, indecomposable, reconstruct, unit_idempotents)
from tcat.fusion import StructureError, apply_gauge, deligne_product, gauge_equivalent, pentagon_check, pointed_category


def perfect_matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def all_free_z2_specs(size: int):
    Y = [f"y{i}" for i in range(size)]
    for m in perfect_matchings(Y):
        action = {}
        for a, b in m:
            action[a], action[b] = b, a
        yield ConvCatSpec(tuple(Y), 2, action)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_plain_convolution_category(k):
    C = conv_category(ConvCatSpec.plain(k))
    assert len(C.simples) == k * k and len(C.unit) == k
    assert pentagon_check(C).ok and indecomposable(C)
    assert unit_idempotents(C) == [f"y{i}~y{i}" for i in range(k)]
    for e in C.unit:
        assert list(corner_category(C, e).simples) == [e]


@pytest.mark.parametrize("size", [2, 4, 6])
def test_equivariantization_split_for_every_free_involution(size):
    specs = list(all_free_z2_specs(size))
    assert len(specs) == {2: 1, 4: 3, 6: 15}[size]
    for spec in specs:
        res = equivariantization_split(spec)
        C = conv_category(spec)
        assert res.gauge is not None
        assert apply_gauge(C, res.gauge) == res.model
        assert len(C.simples) == 2 * (size // 2) ** 2


@pytest.mark.parametrize("p", [0, 1])
def test_twisted_orbit_category_splits_with_the_same_class(p):
    spec = ConvCatSpec.free_cyclic(2, 2, p)
    res = equivariantization_split(spec)
    assert res.gauge is not None
    expected = deligne_product(pointed_category(standard_cocycle(2, p)), conv_category(ConvCatSpec.plain(2)))
    assert gauge_equivalent(res.model, expected, 8) is not None
    assert gauge_equivalent(res.model, deligne_product(pointed_category(standard_cocycle(2, 1 - p)), conv_category(ConvCatSpec.plain(2))), 8) is None


def test_z3_action_splits():
    res = equivariantization_split(ConvCatSpec.free_cyclic(2, 3, 1), 9)
    assert res.gauge is not None


@pytest.mark.parametrize("k", [1, 2, 3])
def test_reconstruction_recovers_coh(k):
    C = conv_category(ConvCatSpec.plain(k))
    for e in C.unit:
        res = reconstruct(C, e)
        assert res.relabel is not None and res.gauge_checked and res.gauge is not None


def test_reconstruction_of_a_twisted_product():
    C = deligne_product(pointed_category(standard_cocycle(2, 1)), conv_category(ConvCatSpec.plain(2)))
    res = reconstruct(C, C.unit[0])
    assert res.gauge is not None


def test_decomposable_input_is_rejected():
    C = conv_category(ConvCatSpec.plain(1))
    U = disjoint_union(C, C)
    assert not indecomposable(U)
    with pytest.raises(StructureError):
        reconstruct(U, U.unit[0])


@pytest.mark.parametrize("obj", [
    {"Y": []},
    {"Y": ["a", "a"]},
    {"Y": ["a~b"]},
    {"Y": ["a", "b"], "A": {"n": 2, "action": {"a": "a", "b": "b"}}},
    {"Y": ["a", "b", "c"], "A": {"n": 2, "action": {"a": "b", "b": "c", "c": "a"}}},
    {"Y": ["a", "b"], "A": {"n": 2}},
    {"Z": ["a"]},
])
def test_malformed_specs(obj):
    with pytest.raises(ConvSpecError):
        ConvCatSpec.from_json(obj)


def test_spec_json_round_trip():
    spec = ConvCatSpec.free_cyclic(3, 2, 1)
    assert ConvCatSpec.loads(json.dumps(spec.to_json())) == spec
    with pytest.raises(ConvSpecError):
        ConvCatSpec.loads("{")
