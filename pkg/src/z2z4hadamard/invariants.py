"""Hadamard property, kernel, rank, span basis, block partitions, signatures."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import CodeType, CoordPerm
from .codes import BinaryCode
from .construct import build_G, build_K, star_int


@dataclass(frozen=True)
class Signature:
    n: int
    size: int
    rank: int
    kernel_dim: int

    def as_dict(self) -> dict:
        return {"n": self.n, "size": self.size, "rank": self.rank, "kernel_dim": self.kernel_dim}


@dataclass(frozen=True)
class Partition:
    """Class label per coordinate; labels numbered by first appearance."""

    n: int
    labels: tuple[int, ...]

    @classmethod
    def from_keys(cls, keys: Sequence) -> "Partition":
        ids: dict = {}
        return cls(len(keys), tuple(ids.setdefault(k, len(ids)) for k in keys))

    @property
    def classes(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return [tuple(v) for v in out.values()]

    @property
    def sizes(self) -> list[int]:
        return sorted(Counter(self.labels).values())

    def is_stabilized_by(self, perm: CoordPerm | Sequence[int]) -> bool:
        """True iff the image of every class is a class."""
        images = perm.images if isinstance(perm, CoordPerm) else perm
        seen: dict[int, int] = {}
        for i, lab in enumerate(self.labels):
            target = self.labels[images[i]]
            if seen.setdefault(lab, target) != target:
                return False
        return len(set(seen.values())) == len(seen)


def gf2_basis(words: Iterable[int]) -> list[int]:
    """Reduced echelon basis (by leading bit) of the GF(2) span."""
    pivots: dict[int, int] = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top not in pivots:
                pivots[top] = w
                break
            w ^= pivots[top]
    return list(pivots.values())


def rank_of(code: BinaryCode | Iterable[int]) -> int:
    words = code.words if isinstance(code, BinaryCode) else code
    return len(gf2_basis(words))


def span_contains(basis: Sequence[int], w: int) -> bool:
    return rank_of(list(basis) + [w]) == rank_of(basis)


def span_set(words: Iterable[int]) -> frozenset[int]:
    out = {0}
    for b in gf2_basis(words):
        out |= {x ^ b for x in out}
    return frozenset(out)


def distance_spectrum(code: BinaryCode) -> Counter:
    """Counts of pairwise Hamming distances over unordered pairs of distinct words."""
    ws = sorted(code.words)
    spec: Counter = Counter()
    for i, u in enumerate(ws):
        for v in ws[i + 1 :]:
            spec[(u ^ v).bit_count()] += 1
    return spec


def is_hadamard(code: BinaryCode) -> bool:
    n = code.n
    if len(code) != 2 * n or n % 2:
        return False
    return min(distance_spectrum(code)) == n // 2


def has_hadamard_spectrum(code: BinaryCode) -> bool:
    n = code.n
    return n % 2 == 0 and set(distance_spectrum(code)) <= {n // 2, n}


def kernel_of(code: BinaryCode) -> BinaryCode:
    """{x in C : x + C = C}; searching inside C is enough because 0 is in C."""
    if 0 not in code.words:
        raise ValueError("kernel_of needs the all-zero word in the code")
    words = code.words
    ker = [x for x in sorted(words) if all((x ^ c) in words for c in words)]
    return BinaryCode(code.n, frozenset(ker))


def kernel_via_star(code: BinaryCode, t: CodeType | None = None) -> BinaryCode:
    """Codewords of order <= 2 in (C, *).  ``code`` must be in the Phi layout."""
    t = t or code.type
    if t is None:
        raise ValueError("kernel_via_star needs the code type")
    if t.n != code.n:
        raise ValueError(f"type length {t.n} != code length {code.n}")
    ker = [x for x in code.words if star_int(x, x, t.alpha, t.beta) == 0]
    return BinaryCode(code.n, frozenset(ker))


def kernel_dimension(code: BinaryCode) -> int:
    size = len(kernel_of(code))
    return size.bit_length() - 1


def span_basis_words(gamma_dot: int, delta: int) -> list[int]:
    """y; w_j; w_j . w_j' (j < j'); u_i; v_j  as point-layout words."""
    G = build_G(gamma_dot, delta)
    K = build_K(gamma_dot, delta)
    y = G.rows[0]
    us = list(G.rows[1 : 1 + gamma_dot])
    vs = list(G.rows[1 + gamma_dot :])
    ws = list(K.rows[1 : 1 + delta])
    prods = [ws[j] & ws[jj] for j in range(delta) for jj in range(j + 1, delta)]
    return [y, *ws, *prods, *us, *vs]


def column_partition(rows: Sequence[int], n: int) -> Partition:
    return Partition.from_keys([tuple((r >> i) & 1 for r in rows) for i in range(n)])


def block_partition(gamma_dot: int, delta: int) -> tuple[Partition, Partition]:
    """Blocks: equal columns of K.  Macroblocks: equal columns of (w_1..w_delta)."""
    K = build_K(gamma_dot, delta)
    blocks = column_partition(K.rows, K.n)
    macro = column_partition(K.rows[1 : 1 + delta], K.n)
    return blocks, macro


def kernel_partition(code: BinaryCode) -> Partition:
    """Coordinates with equal columns over the kernel; preserved by every automorphism."""
    return column_partition(gf2_basis(kernel_of(code).words), code.n)


def signature(code: BinaryCode) -> Signature:
    if 0 not in code.words:
        raise ValueError("signature needs the all-zero word in the code")
    return Signature(code.n, len(code), rank_of(code), kernel_dimension(code))
