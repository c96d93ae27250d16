from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from z2z4hadamard.algebra import (
    AffineMap,
    CodeType,
    CoordPerm,
    GroupPoint,
    MixedWord,
    MonomialTransform,
    enumerate_points,
    gray,
    gray_inv,
    phi_ext,
    phi_ext_inv,
    phi_plus,
    pi_x,
    point_space,
    star,
)
from z2z4hadamard.construct import star_int


def test_gray_table():
    assert gray([0, 1, 2, 3]) == (0, 0, 0, 1, 1, 1, 1, 0)
    assert gray_inv((0, 0, 0, 1, 1, 1, 1, 0)) == (0, 1, 2, 3)


def test_gray_rejects_bad_input():
    with pytest.raises(ValueError):
        gray([4])
    with pytest.raises(ValueError):
        gray_inv((0, 1, 1))


def test_phi_plus():
    assert phi_plus([0, 1, 2, 3]) == (0, 1, 1, 0)


def test_code_type_properties():
    t = CodeType(8, 12, 2, 2)
    assert (t.n, t.gamma_dot, t.delta_dot) == (32, 1, 1)
    with pytest.raises(ValueError):
        CodeType(-1, 0, 0, 0)


mixed_words = st.integers(0, 4).flatmap(
    lambda a: st.integers(0, 4).flatmap(
        lambda b: st.tuples(
            st.tuples(*[st.integers(0, 1)] * a) if a else st.just(()),
            st.tuples(*[st.integers(0, 3)] * b) if b else st.just(()),
            st.tuples(*[st.integers(0, 1)] * a) if a else st.just(()),
            st.tuples(*[st.integers(0, 3)] * b) if b else st.just(()),
        ).map(lambda p: (MixedWord(a, b, p[0], p[1]), MixedWord(a, b, p[2], p[3])))
    )
)


@given(mixed_words)
def test_phi_ext_round_trip(pair):
    u, _ = pair
    assert phi_ext_inv(phi_ext(u), u.alpha, u.beta) == u


@given(mixed_words)
def test_star_is_the_transported_sum(pair):
    u, v = pair
    t = CodeType(u.alpha, u.beta, 0, 0)
    assert star(phi_ext(u), phi_ext(v), t) == phi_ext(u + v)


@given(mixed_words)
def test_packed_star_matches_tuple_star(pair):
    u, v = pair
    t = CodeType(u.alpha, u.beta, 0, 0)
    x, y = phi_ext(u), phi_ext(v)
    to_int = lambda w: sum(b << i for i, b in enumerate(w))
    assert star_int(to_int(x), to_int(y), u.alpha, u.beta) == to_int(star(x, y, t))


def test_pi_x_swaps_unequal_pairs():
    t = CodeType(1, 2, 0, 0)
    p = pi_x((1, 0, 1, 1, 1), t)
    assert p.images == (0, 2, 1, 3, 4)


def test_mixed_word_negation_and_validation():
    m = MixedWord(1, 3, (1,), (0, 1, 3))
    assert -m == MixedWord(1, 3, (1,), (0, 3, 1))
    assert m + (-m) == MixedWord.zero(1, 3)
    with pytest.raises(ValueError):
        MixedWord(1, 1, (2,), (0,))


@given(st.permutations(range(7)), st.permutations(range(7)))
def test_coord_perm_group_laws(a, b):
    p, q = CoordPerm(tuple(a)), CoordPerm(tuple(b))
    word = tuple(range(10, 17))
    assert p.compose(q).apply(word) == p.apply(q.apply(word))
    assert p.compose(p.inverse()).is_identity()


def test_coord_perm_rejects_non_permutation():
    with pytest.raises(ValueError):
        CoordPerm((0, 0, 1))


def test_monomial_transform_signs_then_moves():
    T = MonomialTransform(CoordPerm((0,)), CoordPerm((1, 0)), (True, False))
    assert T.apply(MixedWord(1, 2, (1,), (1, 2))) == MixedWord(1, 2, (1,), (2, 3))


def test_group_point_arithmetic():
    sp = point_space(2, 2)
    pts = enumerate_points(2, 2)
    assert len(pts) == sp.size == 64
    for p in pts[::7]:
        assert (p + (-p)) == GroupPoint.zero(2, 2)
        assert GroupPoint.from_index(2, 2, p.index) == p
        assert p.scale(2).order <= 2
    assert GroupPoint(0, 2, (), (1, 2)).order == 4
    assert GroupPoint(1, 1, (1,), (2,)).order == 2


def test_point_space_tables_agree_with_points():
    sp = point_space(1, 2)
    pts = enumerate_points(1, 2)
    for p in pts:
        assert pts[int(sp.neg[p.index])] == -p
        assert bool(sp.order_le2[p.index]) == (p.order <= 2)


def test_affine_map_rejects_order4_image_of_binary_generator():
    with pytest.raises(ValueError):
        AffineMap.from_matrix(1, 1, [[0, 1], [0, 1]], [0, 0])


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1))
def test_affine_table_and_composition(seed):
    from z2z4hadamard.autgrp import random_affine_bijection

    rng = np.random.default_rng(seed)
    f = random_affine_bijection(1, 2, rng)
    g = random_affine_bijection(1, 2, rng)
    pts = enumerate_points(1, 2)
    tab = f.table()
    assert all(pts[int(tab[p.index])] == f(p) for p in pts)
    h = f.then(g)
    assert all(h(p) == g(f(p)) for p in pts)
    assert f.is_bijective()
