from __future__ import annotations

import pytest

from z2z4hadamard.algebra import CoordPerm
from z2z4hadamard.construct import build_B, build_C
from z2z4hadamard.equiv import (
    SearchLimitError,
    apply_coord_perm,
    class_count,
    classify,
    coordinate_profile,
    search_equivalence,
    theorem1_permutation,
)

B_PARAMS = [(t - 1 - 2 * d, d) for t in range(1, 8) for d in range((t - 1) // 2 + 1)]


@pytest.mark.parametrize("g,d", B_PARAMS)
def test_explicit_b_to_c_permutation(g, d):
    perm = theorem1_permutation(g, d)
    assert apply_coord_perm(build_B(g, d).binary, perm) == build_C(g + 1, d).binary


def test_explicit_permutation_small_case():
    assert str(theorem1_permutation(0, 1)) == "4,0,7,1,6,2,5,3"


def test_apply_coord_perm_checks_length():
    with pytest.raises(ValueError):
        apply_coord_perm(build_C(0, 2).binary, CoordPerm.identity(8))


def test_search_finds_lexicographically_least_witness():
    perm = search_equivalence(build_B(0, 1).binary, build_C(1, 1).binary)
    assert str(perm) == "0,1,2,4,7,6,5,3"


def test_search_rejects_inequivalent_codes():
    assert search_equivalence(build_C(0, 2).binary, build_C(4, 0).binary) is None
    assert search_equivalence(build_C(0, 2).binary, build_C(3, 0).binary) is None


def test_search_respects_cap():
    with pytest.raises(SearchLimitError):
        search_equivalence(build_C(1, 2).binary, build_C(1, 2).binary, n_max=16)


def test_search_between_linear_delta_zero_and_one():
    c1, c2 = build_C(4, 0).binary, build_C(2, 1).binary
    perm = search_equivalence(c1, c2)
    assert perm is not None and apply_coord_perm(c1, perm) == c2


@pytest.mark.parametrize("t", range(3, 9))
def test_class_counts(t):
    rows = classify(t)
    assert class_count(rows) == t // 2
    ids = {r.params: r.class_id for r in rows}
    assert ids[(t, 0)] == ids[(t - 2, 1)]
    assert len(set(ids.values())) == len(ids) - 1


def test_classify_with_b_family():
    rows = classify(5, include_b=True)
    assert class_count(rows) == 2
    assert len(rows) == 3 + 3


def test_classify_limits():
    with pytest.raises(ValueError):
        classify(2)
    with pytest.raises(SearchLimitError):
        classify(9)


def test_classification_row_dict():
    row = classify(4)[-1]
    d = row.as_dict()
    assert d["params"] == {"gamma_dot": 0, "delta": 2}
    assert d["signature"]["kernel_dim"] == 3


def test_coordinate_profile_is_invariant():
    code = build_C(0, 2).binary
    perm = CoordPerm(tuple(reversed(range(16))))
    assert sorted(coordinate_profile(code)) == sorted(coordinate_profile(apply_coord_perm(code, perm)))
