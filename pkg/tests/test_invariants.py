from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from z2z4hadamard.codes import BinaryCode
from z2z4hadamard.construct import build_B, build_C, build_K
from z2z4hadamard.invariants import (
    Partition,
    block_partition,
    distance_spectrum,
    gf2_basis,
    has_hadamard_spectrum,
    is_hadamard,
    kernel_dimension,
    kernel_of,
    kernel_partition,
    kernel_via_star,
    rank_of,
    signature,
    span_basis_words,
    span_contains,
    span_set,
)

C_PARAMS = [(t - 2 * d, d) for t in range(1, 7) for d in range(t // 2 + 1)]


@pytest.mark.parametrize("g,d", C_PARAMS)
def test_hadamard(g, d):
    code = build_C(g, d).binary
    assert is_hadamard(code) and has_hadamard_spectrum(code)
    n = code.n
    spec = distance_spectrum(code)
    assert spec[n] == n and sum(spec.values()) == (2 * n) * (2 * n - 1) // 2


def test_not_hadamard():
    assert not is_hadamard(BinaryCode(4, frozenset({0, 1, 3, 7, 15, 2, 4, 8})))


@pytest.mark.parametrize("g,d", [p for p in C_PARAMS if p[1] != 1])
def test_kernel_three_ways(g, d):
    con = build_C(g, d)
    ker = kernel_of(con.binary)
    star = {con.layout.to_point(w) for w in kernel_via_star(con.layout.mixed_code(con.binary)).words}
    assert ker.words == span_set(build_K(g, d).rows) == star
    assert kernel_dimension(con.binary) == 1 + d + g


@pytest.mark.parametrize("g", [0, 1, 2, 3, 4])
def test_delta_one_codes_are_linear(g):
    """Outside delta >= 2 the code is linear: its kernel is all of C, while K
    spans only the order-2 words."""
    con = build_C(g, 1)
    assert kernel_of(con.binary).words == con.binary.words
    star = {con.layout.to_point(w) for w in kernel_via_star(con.layout.mixed_code(con.binary)).words}
    assert star == span_set(build_K(g, 1).rows)
    assert len(star) * 2 == len(con.binary)


def test_kernel_members_fix_the_code():
    code = build_C(1, 2).binary
    ker = kernel_of(code)
    assert ker.words <= code.words
    assert all((a ^ b) in ker.words for a in ker.words for b in ker.words)
    assert all({x ^ c for c in code.words} == code.words for x in ker.words)


def test_kernel_needs_zero():
    with pytest.raises(ValueError):
        kernel_of(BinaryCode(2, frozenset({1, 2})))


def test_kernel_via_star_checks_length():
    code = build_C(0, 2).binary
    with pytest.raises(ValueError):
        kernel_via_star(code, build_C(1, 2).binary.type)


@pytest.mark.parametrize("g,d", [(0, 2), (1, 2), (0, 3), (2, 2)])
def test_rank_from_span_basis(g, d):
    """Rank equals the number of span words y, w_j, w_j.w_j', u_i, v_j."""
    code = build_C(g, d).binary
    words = span_basis_words(g, d)
    assert rank_of(code) == rank_of(words) == len(words) == 1 + g + 2 * d + d * (d - 1) // 2


def test_signatures():
    assert signature(build_C(0, 2).binary).as_dict() == {"n": 16, "size": 32, "rank": 6, "kernel_dim": 3}
    assert signature(build_C(1, 2).binary).as_dict() == {"n": 32, "size": 64, "rank": 7, "kernel_dim": 4}
    assert signature(build_C(0, 3).binary).as_dict() == {"n": 64, "size": 128, "rank": 10, "kernel_dim": 4}
    assert signature(build_C(4, 0).binary).as_dict() == {"n": 16, "size": 32, "rank": 5, "kernel_dim": 5}
    assert signature(build_B(1, 1).binary) == signature(build_C(2, 1).binary)


@pytest.mark.parametrize("g,d", [(0, 2), (1, 2), (0, 3), (2, 2)])
def test_block_partitions(g, d):
    blocks, macro = block_partition(g, d)
    assert blocks.sizes == [2**d] * 2 ** (g + d)
    assert macro.sizes == [2 ** (g + d)] * 2**d
    # every block lies inside one macroblock
    for cls in blocks.classes:
        assert len({macro.labels[i] for i in cls}) == 1
    assert kernel_partition(build_C(g, d).binary) == blocks


def test_partition_stabilizer():
    p = Partition.from_keys("aabbc")
    assert p.labels == (0, 0, 1, 1, 2)
    assert p.is_stabilized_by((1, 0, 3, 2, 4))
    assert p.is_stabilized_by((2, 3, 0, 1, 4))
    assert not p.is_stabilized_by((0, 2, 1, 3, 4))


@given(st.lists(st.integers(0, 2**12 - 1), max_size=12))
def test_gf2_basis_spans_input(words):
    basis = gf2_basis(words)
    assert len(basis) == rank_of(words)
    assert all(span_contains(basis, w) for w in words)
    assert len(span_set(words)) == 2 ** len(basis)
