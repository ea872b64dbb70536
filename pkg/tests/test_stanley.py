"""Presentations, Stanley spaces, the box verifier, and the combinators."""

from itertools import product

import pytest

from stanley_lab import (
    InputError,
    MonomialIdeal,
    ModulePresentation,
    StanleyDecomposition,
    StanleySpace,
    basis_in_box,
    concat,
    embed,
    free_extend,
    shift,
    tensor,
    verify,
)

XY = MonomialIdeal.make(2, [(1, 1)])
S_MOD_XY = ModulePresentation.quotient_ring(XY)
P3 = MonomialIdeal.make(3, [(1, 1, 0), (0, 1, 1)])


def brute_basis(module, corner):
    out = set()
    for a in product(*(range(c + 1) for c in corner)):
        if module.upper.contains(a) and not module.lower.contains(a):
            out.add(a)
    return out


def test_presentation_validates_containment():
    with pytest.raises(InputError):
        ModulePresentation.make(2, MonomialIdeal.unit(2), MonomialIdeal.zero(2))


def test_zero_module_detection():
    ideal = MonomialIdeal.make(2, [(1, 0)])
    assert ModulePresentation.make(2, ideal, ideal).is_zero()
    assert not S_MOD_XY.is_zero()


def test_basis_in_box():
    assert basis_in_box(S_MOD_XY, (1, 1)) == {(0, 0), (1, 0), (0, 1)}
    zero = ModulePresentation.make(2, XY, XY)
    assert basis_in_box(zero, (3, 3)) == set()
    layer = ModulePresentation.power_layer(P3, 1)
    expected = {(1, 1, 0), (0, 1, 1), (1, 2, 0), (0, 2, 1), (1, 1, 1)}
    assert basis_in_box(layer, (1, 2, 1)) == expected
    assert basis_in_box(layer, (1, 2, 1)) == brute_basis(layer, (1, 2, 1))


def test_verify_valid_quotient():
    dec = StanleyDecomposition(
        S_MOD_XY,
        (
            StanleySpace((0, 0), frozenset({1})),
            StanleySpace((0, 1), frozenset({2})),
        ),
    )
    report = verify(dec)
    assert report.valid and report.sdepth == 1


def test_verify_principal_ideal():
    module = ModulePresentation.of_ideal(XY)
    dec = StanleyDecomposition(module, (StanleySpace((1, 1), frozenset({1, 2})),))
    report = verify(dec)
    assert report.valid and report.sdepth == 2


def test_verify_detects_overcoverage():
    dec = StanleyDecomposition(
        S_MOD_XY, (StanleySpace((0, 0), frozenset({1, 2})),)
    )
    report = verify(dec)
    assert not report.valid
    assert report.failure == "outside-module"
    assert report.witness == (1, 1)


def test_verify_detects_uncovered_and_double():
    missing = StanleyDecomposition(
        S_MOD_XY, (StanleySpace((0, 0), frozenset({1})),)
    )
    report = verify(missing)
    assert not report.valid and report.failure == "uncovered"
    assert report.witness == (0, 1)
    doubled = StanleyDecomposition(
        S_MOD_XY,
        (
            StanleySpace((0, 0), frozenset({1})),
            StanleySpace((0, 0), frozenset({2})),
        ),
    )
    report = verify(doubled)
    assert not report.valid and report.failure == "double-covered"


def test_empty_decomposition_of_zero_module_is_valid():
    zero = ModulePresentation.make(2, XY, XY)
    report = verify(StanleyDecomposition(zero, ()))
    assert report.valid and report.sdepth is None


def test_tensor():
    left = StanleyDecomposition(
        S_MOD_XY,
        (
            StanleySpace((0, 0), frozenset({1})),
            StanleySpace((0, 1), frozenset({2})),
        ),
    )
    ideal34 = MonomialIdeal.make(4, [(0, 0, 1, 1)])
    right_module = ModulePresentation.of_ideal(ideal34)
    right = StanleyDecomposition(
        right_module, (StanleySpace((0, 0, 1, 1), frozenset({3, 4})),)
    )
    lifted_xy = MonomialIdeal.make(4, [(1, 1, 0, 0)])
    target = ModulePresentation.make(
        4, lifted_xy * ideal34, ideal34
    )
    left4 = embed(left, (1, 2), target)
    combined = tensor(left4, right, target)
    assert len(combined.spaces) == 2
    assert combined.sdepth() == 1 + 2
    assert verify(combined).valid


def test_tensor_layer_piece():
    # L/L^2 over {x1,x2} tensor S''/J' over {x3,x4}, checked against the
    # piece L/(L^2 + L J') it is supposed to cover
    L = MonomialIdeal.make(4, [(1, 1, 0, 0)])
    Jp = MonomialIdeal.make(4, [(0, 0, 1, 1)])
    target = ModulePresentation.make(4, L * L + L * Jp, L)
    layer = StanleyDecomposition(
        ModulePresentation.power_layer(MonomialIdeal.make(2, [(1, 1)]), 1),
        (
            StanleySpace((1, 1), frozenset({1})),
            StanleySpace((1, 2), frozenset({2})),
        ),
    )
    quotient = StanleyDecomposition(
        S_MOD_XY,
        (
            StanleySpace((0, 0), frozenset({1})),
            StanleySpace((0, 1), frozenset({2})),
        ),
    )
    combined = tensor(
        embed(layer, (1, 2), target), embed(quotient, (3, 4), target), target
    )
    report = verify(combined)
    assert report.valid and report.sdepth == 2


def test_tensor_sdepth_adds_exactly():
    a = StanleyDecomposition(
        S_MOD_XY,
        (StanleySpace((0, 0), frozenset({1})), StanleySpace((0, 1), frozenset({2}))),
    )
    target = ModulePresentation.quotient_ring(
        MonomialIdeal.make(4, [(1, 1, 0, 0), (0, 0, 1, 1)])
    )
    b_module = ModulePresentation.quotient_ring(MonomialIdeal.make(2, [(1, 1)]))
    b = StanleyDecomposition(
        b_module,
        (StanleySpace((0, 0), frozenset({1})), StanleySpace((0, 1), frozenset({2}))),
    )
    combined = tensor(embed(a, (1, 2), target), embed(b, (3, 4), target), target)
    assert combined.sdepth() == a.sdepth() + b.sdepth()
    assert verify(combined).valid


def test_tensor_rejects_overlap():
    a = StanleyDecomposition(S_MOD_XY, (StanleySpace((0, 0), frozenset({1})),))
    with pytest.raises(InputError):
        tensor(a, a, S_MOD_XY)


def test_shift_identity():
    dec = StanleyDecomposition(S_MOD_XY, (StanleySpace((0, 0), frozenset({1})),))
    assert shift(dec, (0, 0), S_MOD_XY).spaces == dec.spaces


def test_free_extend_raises_sdepth():
    dec = StanleyDecomposition(S_MOD_XY, (StanleySpace((0, 0), frozenset({1})),))
    target = ModulePresentation.quotient_ring(XY.extend((1, 2), 4))
    wide = free_extend(embed(dec, (1, 2), target), (3, 4), target)
    assert wide.sdepth() == 3


def test_concat_layers_of_small_quotient():
    # stack I^0/I^1 and I^1/I^2 into S/I^2 for the single-edge ideal
    ideal = XY
    target = ModulePresentation.quotient_ring(ideal**2)
    layer0 = StanleyDecomposition(
        ModulePresentation.power_layer(ideal, 0),
        (
            StanleySpace((0, 0), frozenset({1})),
            StanleySpace((0, 1), frozenset({2})),
        ),
    )
    layer1 = StanleyDecomposition(
        ModulePresentation.power_layer(ideal, 1),
        (
            StanleySpace((1, 1), frozenset({1})),
            StanleySpace((1, 2), frozenset({2})),
        ),
    )
    assert verify(layer0).valid and verify(layer1).valid
    stacked = concat([layer0, layer1], target)
    report = verify(stacked)
    assert report.valid and report.sdepth == 1
    assert len(stacked.spaces) == len(layer0.spaces) + len(layer1.spaces)


def test_certificate_json_roundtrip():
    dec = StanleyDecomposition(
        S_MOD_XY,
        (
            StanleySpace((0, 0), frozenset({1})),
            StanleySpace((0, 1), frozenset({2})),
        ),
    )
    obj = dec.to_json()
    assert obj["spaces"][0] == {"u": [0, 0], "Z": [1]}
    again = StanleyDecomposition.from_json(obj)
    assert again == dec
