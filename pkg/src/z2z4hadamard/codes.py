"""Code containers.

A binary word of length n is stored as a Python int with bit i holding
coordinate i.  Bulk operations (permuting every codeword, membership of a
permuted code) go through a uint8 matrix view.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .algebra import CodeType, CoordPerm, MixedWord, phi_ext


def bits_to_int(bits: Sequence[int]) -> int:
    w = 0
    for i, b in enumerate(bits):
        if b:
            w |= 1 << i
    return w


def int_to_bits(w: int, n: int) -> tuple[int, ...]:
    return tuple((w >> i) & 1 for i in range(n))


def rows_to_ints(mat: np.ndarray) -> list[int]:
    mat = np.asarray(mat, dtype=np.uint8)
    packed = np.packbits(mat, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


def ints_to_rows(words: Iterable[int], n: int) -> np.ndarray:
    words = list(words)
    nbytes = max(1, (n + 7) // 8)
    buf = b"".join(w.to_bytes(nbytes, "little") for w in words)
    arr = np.frombuffer(buf, dtype=np.uint8).reshape(len(words), nbytes)
    return np.unpackbits(arr, axis=1, bitorder="little")[:, :n]


def word_str(w: int, n: int) -> str:
    return "".join("1" if (w >> i) & 1 else "0" for i in range(n))


def _row_keys(mat: np.ndarray) -> np.ndarray:
    packed = np.ascontiguousarray(np.packbits(mat, axis=1))
    return np.sort(packed.view(np.dtype((np.void, packed.shape[1]))).ravel())


@dataclass(eq=False)
class BinaryCode:
    """A set of binary words of length n, optionally carrying its Z2Z4 type."""

    n: int
    words: frozenset
    type: CodeType | None = None

    def __post_init__(self) -> None:
        self.words = frozenset(int(w) for w in self.words)
        if not self.words:
            raise ValueError("a code needs at least one word")
        if self.n < 0 or any(w >> self.n for w in self.words):
            raise ValueError(f"codeword longer than n={self.n}")

    @classmethod
    def from_tuples(cls, words: Iterable[Sequence[int]], n: int | None = None, type: CodeType | None = None):
        words = [tuple(w) for w in words]
        if n is None:
            n = len(words[0])
        if any(len(w) != n for w in words):
            raise ValueError("all codewords must have length n")
        return cls(n, frozenset(bits_to_int(w) for w in words), type)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        if not isinstance(w, int):
            w = bits_to_int(w)
        return w in self.words

    def __iter__(self):
        return iter(sorted(self.words))

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryCode) and self.n == other.n and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.n, self.words))

    def tuples(self) -> list[tuple[int, ...]]:
        return [int_to_bits(w, self.n) for w in sorted(self.words)]

    @cached_property
    def matrix(self) -> np.ndarray:
        return ints_to_rows(sorted(self.words), self.n)

    @cached_property
    def _keys(self) -> np.ndarray:
        return _row_keys(self.matrix)

    def permute(self, perm: CoordPerm | Sequence[int]) -> "BinaryCode":
        images = np.asarray(perm.images if isinstance(perm, CoordPerm) else perm, dtype=np.int64)
        if len(images) != self.n:
            raise ValueError(f"permutation length {len(images)} != code length {self.n}")
        inv = np.empty_like(images)
        inv[images] = np.arange(self.n)
        return BinaryCode(self.n, frozenset(rows_to_ints(self.matrix[:, inv])), None)

    def is_preserved_by(self, perm: CoordPerm | Sequence[int]) -> bool:
        """True iff the coordinate permutation maps the code onto itself."""
        images = np.asarray(perm.images if isinstance(perm, CoordPerm) else perm, dtype=np.int64)
        inv = np.empty_like(images)
        inv[images] = np.arange(self.n)
        return bool(np.array_equal(_row_keys(self.matrix[:, inv]), self._keys))


@dataclass(eq=False)
class AdditiveCode:
    """A Z2Z4-additive code with provenance (family tag and parameters)."""

    type: CodeType
    words: frozenset
    family: str = ""
    params: tuple = field(default_factory=tuple)

    def __post_init__(self) -> None:
        self.words = frozenset(self.words)
        for m in self.words:
            if (m.alpha, m.beta) != (self.type.alpha, self.type.beta):
                raise ValueError("codeword shape does not match the code type")

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, m: MixedWord) -> bool:
        return m in self.words

    def __eq__(self, other) -> bool:
        return isinstance(other, AdditiveCode) and self.type == other.type and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.type, self.words))

    def is_additive(self) -> bool:
        zero = MixedWord.zero(self.type.alpha, self.type.beta)
        return zero in self.words and all(u + v in self.words for u in self.words for v in self.words)

    def gray_image(self) -> BinaryCode:
        """Binary image under the extended Gray map (coordinates in Phi order)."""
        return BinaryCode.from_tuples((phi_ext(m) for m in self.words), self.type.n, self.type)

    def sorted_words(self) -> list[MixedWord]:
        return sorted(self.words, key=lambda m: (m.bits, m.quats))
