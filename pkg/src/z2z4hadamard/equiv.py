"""Permutation equivalence between the B and C families, classification by t."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .algebra import CodeType, CoordPerm, point_space
from .codes import BinaryCode
from .construct import build_B, build_C
from .invariants import Signature, kernel_partition, signature
from .search import PermSearch

DEFAULT_T_CAP = 8


class SearchLimitError(ValueError):
    """Requested search exceeds the configured size cap."""


def theorem1_permutation(gamma: int, delta_dot: int) -> CoordPerm:
    """Coordinates of B(gamma, delta_dot) -> points of C(gamma+1, delta_dot).

    Position 2*index(v) goes to the point (-v, e=1) and 2*index(v)+1 to
    (v, e=0); e is the last binary coordinate of the target point.
    """
    src = point_space(gamma, delta_dot)
    dst = point_space(gamma + 1, delta_dot)
    x, y = src.digits[:, :gamma], src.digits[:, gamma:]
    neg_y = (-y) % 4
    ones = np.ones((src.size, 1), dtype=np.int64)
    to_neg = dst.index(np.hstack([x, ones, neg_y]))
    to_pos = dst.index(np.hstack([x, 0 * ones, y]))
    images = np.empty(2 * src.size, dtype=np.int64)
    images[0::2] = to_neg
    images[1::2] = to_pos
    return CoordPerm(tuple(images))


def apply_coord_perm(code: BinaryCode, perm: CoordPerm) -> BinaryCode:
    if perm.n != code.n:
        raise ValueError(f"permutation length {perm.n} != code length {code.n}")
    return code.permute(perm)


@dataclass(frozen=True)
class ClassificationRow:
    t: int
    family: str
    params: tuple[int, int]
    type: CodeType
    signature: Signature
    class_id: int

    def as_dict(self) -> dict:
        names = ("gamma_dot", "delta") if self.family == "C" else ("gamma", "delta_dot")
        return {
            "t": self.t,
            "family": self.family,
            "params": dict(zip(names, self.params)),
            "type": {"alpha": self.type.alpha, "beta": self.type.beta, "gamma": self.type.gamma, "delta": self.type.delta},
            "signature": self.signature.as_dict(),
            "class_id": self.class_id,
        }


def classify(t: int, cap: int = DEFAULT_T_CAP, include_b: bool = False) -> list[ClassificationRow]:
    """One row per C(gamma_dot, delta) with gamma_dot + 2 delta = t (and per
    B(gamma, delta_dot) with gamma + 2 delta_dot + 1 = t if ``include_b``);
    class ids are assigned by equal signature."""
    if t < 3:
        raise ValueError("classification is defined for t >= 3")
    if t > cap:
        raise SearchLimitError(f"t={t} exceeds the cap {cap}")
    entries = [("C", (t - 2 * d, d)) for d in range(t // 2 + 1)]
    if include_b:
        entries += [("B", (t - 1 - 2 * d, d)) for d in range((t - 1) // 2 + 1)]
    rows = []
    ids: dict[Signature, int] = {}
    for fam, params in entries:
        code = (build_C if fam == "C" else build_B)(*params).binary
        sig = signature(code)
        cid = ids.setdefault(sig, len(ids))
        rows.append(ClassificationRow(t, fam, params, code.type, sig, cid))
    return rows


def class_count(rows: list[ClassificationRow]) -> int:
    return len({r.class_id for r in rows})


def coordinate_profile(code: BinaryCode) -> list[tuple]:
    """Per coordinate: weight distribution of the codewords having a 1 there."""
    profiles: list[Counter] = [Counter() for _ in range(code.n)]
    for w in code.words:
        wt = w.bit_count()
        for i in range(code.n):
            if (w >> i) & 1:
                profiles[i][wt] += 1
    return [tuple(sorted(p.items())) for p in profiles]


def search_equivalence(c1: BinaryCode, c2: BinaryCode, n_max: int = 16) -> CoordPerm | None:
    """A coordinate permutation mapping c1 onto c2, or None.

    The witness is the lexicographically least image list.
    """
    if c1.n != c2.n or len(c1) != len(c2):
        return None
    if c1.n > n_max:
        raise SearchLimitError(f"n={c1.n} exceeds n_max={n_max}")
    prof1, prof2 = coordinate_profile(c1), coordinate_profile(c2)
    if sorted(prof1) != sorted(prof2):
        return None
    blocks1 = blocks2 = None
    if 0 in c1.words and 0 in c2.words:
        if signature(c1) != signature(c2):
            return None
        k1, k2 = kernel_partition(c1), kernel_partition(c2)
        if k1.sizes != k2.sizes:
            return None
        blocks1, blocks2 = k1.labels, k2.labels
    engine = PermSearch(c1, c2, prof1, prof2, blocks1, blocks2)
    images = engine.first()
    if images is None:
        return None
    perm = CoordPerm(tuple(images))
    if apply_coord_perm(c1, perm) != c2:
        raise AssertionError("search returned a permutation that does not map c1 onto c2")
    return perm
