from __future__ import annotations

import itertools
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from z2z4hadamard import autgrp
from z2z4hadamard.algebra import CoordPerm
from z2z4hadamard.codes import BinaryCode
from z2z4hadamard.construct import PointLayout, build_B, build_C
from z2z4hadamard.equiv import SearchLimitError
from z2z4hadamard.invariants import block_partition


@pytest.mark.parametrize(
    "a,b,expected", [(0, 1, 8), (0, 2, 1536), (0, 3, 5505024), (1, 2, 49152), (1, 1, 64), (2, 0, 24)]
)
def test_affine_counts(a, b, expected):
    assert autgrp.count_affine_bijections(a, b) == expected


@pytest.mark.parametrize("a,b", [(0, 1), (0, 2), (1, 1), (2, 1), (1, 2), (3, 0)])
def test_enumeration_matches_count(a, b):
    mats = list(autgrp.linear_bijection_matrices(a, b))
    assert len(mats) == autgrp.count_linear_bijections(a, b)
    assert len({m.tobytes() for m in mats}) == len(mats)


def test_enumeration_cap():
    with pytest.raises(SearchLimitError):
        next(autgrp.enumerate_affine_bijections(0, 7))


def test_affine_tables_are_distinct_bijections():
    tabs = {tuple(t) for t in autgrp.affine_tables(0, 2)}
    assert len(tabs) == 1536
    assert all(sorted(t) == list(range(16)) for t in itertools.islice(tabs, 50))


@pytest.mark.parametrize("a,b", [(0, 1), (0, 2), (1, 1)])
def test_negation_criterion_matches_pointwise_check(a, b):
    for m in autgrp.enumerate_affine_bijections(a, b):
        assert autgrp.is_negation_preserving(m) == autgrp.is_negation_preserving(m, exhaustive=True)


def test_negation_preserving_counts():
    assert autgrp.count_negation_preserving(0, 1) == 4 == autgrp.maut_C_order(0, 1).order
    assert autgrp.count_negation_preserving(0, 2) == 384 == autgrp.maut_C_order(0, 2).order


def test_order_values():
    assert [autgrp.maut_B_order(*p).order for p in [(0, 0), (0, 1), (1, 1)]] == [2, 32, 512]
    assert [autgrp.maut_C_order(*p).order for p in [(0, 1), (1, 1), (0, 2)]] == [4, 32, 384]
    assert autgrp.aut_C_order(0, 2).order == 9216
    assert autgrp.aut_C_order(4, 0).order == 322560
    assert autgrp.aut_C_order(0, 3).order == 5505024
    assert autgrp.aut_C_order(2, 1).order == autgrp.general_affine_order(4)


@pytest.mark.parametrize("g,d", [(g, d) for g in range(5) for d in range(5)])
def test_products_agree_with_closed_forms(g, d):
    assert autgrp.maut_B_order(g, d).order == autgrp.maut_B_closed_form(g, d)
    assert autgrp.maut_C_order(g, d).order == autgrp.maut_C_closed_form(g, d)
    assert autgrp.aut_C_order(g, d).order == autgrp.aut_C_closed_form(g, d)


def test_report_dict_uses_decimal_strings():
    d = autgrp.aut_C_order(3, 4).as_dict()
    assert isinstance(d["order"], str) and int(d["order"]) > 2**53
    assert list(d) == ["family", "params", "order", "factors", "closed_form", "brute_checked", "brute_order"]


def test_sign_function_validation_and_values():
    with pytest.raises(ValueError):
        autgrp.SignFunction(0, 1, 2, (), (0,))
    with pytest.raises(ValueError):
        autgrp.SignFunction(0, 1, 1, (), (1,))
    r = autgrp.SignFunction(1, 1, 1, (1,), (2,))
    assert set(r.values()) == {1, 3}
    assert len(autgrp.enumerate_sign_functions(1, 1)) == 8


def test_tau_rho_sigma_generate_the_whole_monomial_group():
    A = build_B(1, 1).additive
    maps = list(autgrp.enumerate_affine_bijections(1, 1))
    transforms = {
        autgrp.monomial_tau_rho_sigma(r, m) for r in autgrp.enumerate_sign_functions(1, 1) for m in maps
    }
    assert all(autgrp.apply_monomial(A, T) == A for T in transforms)
    order, found = autgrp.brute_force_maut(A, collect=True)
    assert len(transforms) == order == 512
    assert transforms == set(found)


def test_brute_force_maut_values():
    assert autgrp.brute_force_maut(build_B(0, 1).additive) == 32
    assert autgrp.brute_force_maut(build_C(1, 1).additive) == 32
    assert autgrp.brute_force_maut(build_B(0, 0).additive) == 2


def test_brute_force_maut_cap():
    with pytest.raises(SearchLimitError):
        autgrp.brute_force_maut(build_B(1, 1).additive, cap=factorial(8) * 2**8 - 1)


def test_hadamard_length_four_has_full_symmetric_group():
    code = build_C(2, 0).binary
    assert len(autgrp.enumerate_automorphisms(code)) == 24
    assert autgrp.brute_force_aut(code).order == 24


def test_stabilizer_chain_membership():
    code = build_C(3, 0).binary
    res = autgrp.brute_force_aut(code)
    assert res.order == 1344 == autgrp.general_affine_order(3)
    elems = list(res.elements())
    assert len(set(elems)) == 1344
    assert all(code.is_preserved_by(p) for p in elems)
    assert all(res.contains(p) for p in elems[::97])
    non = [p for p in itertools.permutations(range(8)) if not code.is_preserved_by(p)][:20]
    assert not any(res.contains(p) for p in non)
    assert all(code.is_preserved_by(g) for g in res.generators())


def test_brute_force_aut_matches_full_enumeration():
    code = build_C(1, 1).binary
    assert autgrp.brute_force_aut(code).order == len(autgrp.enumerate_automorphisms(code)) == 1344


def test_brute_force_aut_without_kernel_pruning():
    assert autgrp.brute_force_aut(build_C(1, 1).binary, use_kernel_blocks=False).order == 1344


def test_brute_force_aut_cap():
    with pytest.raises(SearchLimitError):
        autgrp.brute_force_aut(build_C(1, 2).binary)


def test_brute_force_aut_on_a_non_linear_code():
    code = BinaryCode(4, frozenset({0b0000, 0b0011, 0b0101, 0b1110}))
    res = autgrp.brute_force_aut(code)
    assert res.order == sum(code.is_preserved_by(p) for p in itertools.permutations(range(4)))


@pytest.mark.parametrize("g", [0, 1])
def test_special_delta2_automorphisms(g):
    con = build_C(g, 2)
    perms = autgrp.special_delta2_automorphisms(g)
    blocks, macro = block_partition(g, 2)
    assert len(perms) == 6 and perms[0].is_identity()
    for p, sigma in zip(perms, autgrp.GL22):
        assert con.binary.is_preserved_by(p)
        assert blocks.is_stabilized_by(p)
        assert all(any(p[i] == i for i in cls) for cls in blocks.classes)
        assert autgrp.sigma_matrix(autgrp.induced_sigma(p, g, 2)) == sigma
    for p in perms[1:]:
        assert not autgrp.is_affine_point_map(p.images, g, 2)


def test_special_maps_generate_the_full_group_with_affine_maps():
    """The six maps lie in distinct cosets of the affine subgroup of C(0, 2)."""
    res = autgrp.brute_force_aut(build_C(0, 2).binary)
    affine = {tuple(int(i) for i in t) for t in autgrp.affine_tables(0, 2)}
    perms = autgrp.special_delta2_automorphisms(0)
    cosets = set()
    for p in perms:
        assert res.contains(p)
        cosets.add(frozenset(tuple(p[i] for i in a) for a in affine))
    assert len(cosets) == 6
    assert 6 * len(affine) == res.order


def test_block_stabilizing_automorphisms_exist_only_for_linear_sigma():
    perms = autgrp.block_stabilizing_automorphisms(0, 2)
    sigmas = {autgrp.sigma_matrix(autgrp.induced_sigma(p, 0, 2)) for p in perms}
    assert sigmas == set(autgrp.GL22)


def test_induced_sigma_of_identity():
    sig = autgrp.induced_sigma(CoordPerm.identity(16), 0, 2)
    assert all(k == v for k, v in sig.items())


def test_coord_perm_from_affine_b_layout_moves_pairs():
    m = autgrp.random_affine_bijection(0, 1, np.random.default_rng(3))
    perm = autgrp.coord_perm_from_affine(m, PointLayout.for_B(0, 1))
    assert all(perm[2 * i + 1] == perm[2 * i] + 1 for i in range(4))
    assert build_B(0, 1).binary.is_preserved_by(perm)


def test_coord_perm_from_affine_checks_group():
    m = autgrp.random_affine_bijection(0, 1, np.random.default_rng(0))
    with pytest.raises(ValueError):
        autgrp.coord_perm_from_affine(m, PointLayout.for_C(0, 2))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_affine_maps_preserve_c_codes(seed):
    rng = np.random.default_rng(seed)
    for g, d in [(0, 2), (1, 2), (0, 3), (2, 1)]:
        con = build_C(g, d)
        m = autgrp.random_affine_bijection(g, d, rng)
        assert con.binary.is_preserved_by(autgrp.coord_perm_from_affine(m, con.layout))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_monomial_exactly_when_negation_preserving(seed):
    rng = np.random.default_rng(seed)
    con = build_C(1, 2)
    m = autgrp.random_affine_bijection(1, 2, rng)
    T = autgrp.as_monomial(autgrp.coord_perm_from_affine(m, con.layout), con.layout)
    assert (T is not None) == autgrp.is_negation_preserving(m)
    if T is not None:
        assert autgrp.apply_monomial(con.additive, T) == con.additive


@pytest.mark.parametrize("g,d", [(3, 0), (2, 1), (4, 1), (0, 2), (2, 2), (0, 3)])
def test_random_automorphisms_preserve_code(g, d):
    rng = np.random.default_rng(7)
    code = build_C(g, d).binary
    assert all(code.is_preserved_by(autgrp.random_automorphism(g, d, rng)) for _ in range(20))


def test_random_linear_automorphism_needs_linear_hadamard_code():
    with pytest.raises(ValueError):
        autgrp.random_linear_code_automorphism(build_C(0, 2).binary, np.random.default_rng(0))


def test_delta_one_automorphisms_move_blocks():
    """Block structure is only invariant for delta >= 2."""
    rng = np.random.default_rng(1)
    blocks, _ = block_partition(1, 1)
    perms = [autgrp.random_automorphism(1, 1, rng) for _ in range(50)]
    assert not all(blocks.is_stabilized_by(p) for p in perms)


def test_stabilizer_chain_agrees_with_exhaustive_search_n16():
    code = build_C(0, 2).binary
    everything = autgrp.enumerate_automorphisms(code)
    res = autgrp.brute_force_aut(code)
    assert len(everything) == res.order == 9216
    assert all(res.contains(p) for p in everything[::37])
