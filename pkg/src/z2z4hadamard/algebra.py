"""Words over Z2/Z4, Gray-type maps, the star product and the groups Z2^a x Z4^b.

Binary words are plain tuples of 0/1 at this level; the code containers in
:mod:`z2z4hadamard.codes` pack them into ints for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

BinaryWord = tuple  # tuple[int, ...] of 0/1

_GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
_GRAY_INV = {v: k for k, v in _GRAY.items()}
_PHI_PLUS = (0, 1, 1, 0)


@dataclass(frozen=True)
class CodeType:
    """Type (alpha, beta; gamma, delta) of a Z2Z4-additive code."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma, self.delta) < 0:
            raise ValueError(f"negative entry in code type {self}")

    @property
    def n(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def gamma_dot(self) -> int:
        return self.gamma - 1

    @property
    def delta_dot(self) -> int:
        return self.delta - 1

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta};{self.gamma},{self.delta})"


@dataclass(frozen=True)
class MixedWord:
    """Element of Z2^alpha x Z4^beta."""

    alpha: int
    beta: int
    bits: tuple[int, ...]
    quats: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.alpha or len(self.quats) != self.beta:
            raise ValueError("MixedWord lengths do not match alpha/beta")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"binary symbol out of range in {self.bits}")
        if any(q not in (0, 1, 2, 3) for q in self.quats):
            raise ValueError(f"quaternary symbol out of range in {self.quats}")

    @classmethod
    def zero(cls, alpha: int, beta: int) -> "MixedWord":
        return cls(alpha, beta, (0,) * alpha, (0,) * beta)

    def __add__(self, other: "MixedWord") -> "MixedWord":
        if (self.alpha, self.beta) != (other.alpha, other.beta):
            raise ValueError("cannot add mixed words of different shape")
        return MixedWord(
            self.alpha,
            self.beta,
            tuple(a ^ b for a, b in zip(self.bits, other.bits)),
            tuple((a + b) % 4 for a, b in zip(self.quats, other.quats)),
        )

    def __neg__(self) -> "MixedWord":
        return MixedWord(self.alpha, self.beta, self.bits, tuple((-q) % 4 for q in self.quats))

    def __str__(self) -> str:
        return "".join(map(str, self.bits)) + " " + "".join(map(str, self.quats))


def gray(q: Sequence[int]) -> BinaryWord:
    """Gray image of a quaternary word: 0->00, 1->01, 2->11, 3->10."""
    out: list[int] = []
    for s in q:
        if s not in _GRAY:
            raise ValueError(f"not a Z4 symbol: {s!r}")
        out.extend(_GRAY[s])
    return tuple(out)


def gray_inv(w: Sequence[int]) -> tuple[int, ...]:
    if len(w) % 2:
        raise ValueError(f"Gray preimage needs an even length, got {len(w)}")
    try:
        return tuple(_GRAY_INV[(w[i], w[i + 1])] for i in range(0, len(w), 2))
    except KeyError as exc:
        raise ValueError(f"not a binary word: {tuple(w)}") from exc


def phi_ext(m: MixedWord) -> BinaryWord:
    """Extended Gray map: binary part copied, each Z4 symbol expanded in place."""
    return tuple(m.bits) + gray(m.quats)


def phi_ext_inv(w: Sequence[int], alpha: int, beta: int) -> MixedWord:
    if len(w) != alpha + 2 * beta:
        raise ValueError(f"length {len(w)} does not match alpha+2beta={alpha + 2 * beta}")
    return MixedWord(alpha, beta, tuple(w[:alpha]), gray_inv(w[alpha:]))


def phi_plus(q: Sequence[int]) -> BinaryWord:
    """Symbol-wise 0->0, 1->1, 2->1, 3->0."""
    return tuple(_PHI_PLUS[s] for s in q)


@dataclass(frozen=True)
class CoordPerm:
    """Coordinate permutation i -> images[i].

    Acting on words it moves the symbol at coordinate i to coordinate
    images[i], i.e. ``sigma(c)[sigma(i)] == c[i]``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("CoordPerm images are not a bijection")

    @classmethod
    def identity(cls, n: int) -> "CoordPerm":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def apply(self, word: Sequence):
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != permutation length {self.n}")
        out = [None] * self.n
        for i, s in enumerate(word):
            out[self.images[i]] = s
        return tuple(out)

    def inverse(self) -> "CoordPerm":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return CoordPerm(tuple(inv))

    def compose(self, other: "CoordPerm") -> "CoordPerm":
        """``self * other``: apply ``other`` first."""
        return CoordPerm(tuple(self.images[j] for j in other.images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __str__(self) -> str:
        return ",".join(map(str, self.images))


@dataclass(frozen=True)
class MonomialTransform:
    """Permutation of binary and of quaternary coordinates plus sign changes.

    ``signs[j]`` negates source quaternary coordinate j before it is moved to
    ``quat_perm[j]``.
    """

    bin_perm: CoordPerm
    quat_perm: CoordPerm
    signs: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != self.quat_perm.n:
            raise ValueError("one sign flag per quaternary coordinate required")

    @classmethod
    def identity(cls, alpha: int, beta: int) -> "MonomialTransform":
        return cls(CoordPerm.identity(alpha), CoordPerm.identity(beta), (False,) * beta)

    def apply(self, m: MixedWord) -> MixedWord:
        quats = tuple((-q) % 4 if s else q for q, s in zip(m.quats, self.signs))
        return MixedWord(m.alpha, m.beta, self.bin_perm.apply(m.bits), self.quat_perm.apply(quats))

    def is_identity(self) -> bool:
        return self.bin_perm.is_identity() and self.quat_perm.is_identity() and not any(self.signs)


def pi_x(c: Sequence[int], t: CodeType) -> CoordPerm:
    """Swap each Gray pair of the quaternary part whose bits in ``c`` differ."""
    if len(c) != t.n:
        raise ValueError(f"word length {len(c)} does not match type length {t.n}")
    images = list(range(t.n))
    for i in range(t.beta):
        p = t.alpha + 2 * i
        if c[p] != c[p + 1]:
            images[p], images[p + 1] = p + 1, p
    return CoordPerm(tuple(images))


def star(x: Sequence[int], y: Sequence[int], t: CodeType) -> BinaryWord:
    """x * y = x + pi_x(y); transports Z2Z4 addition to Gray images."""
    if len(x) != len(y):
        raise ValueError("star needs words of equal length")
    py = pi_x(x, t).apply(y)
    return tuple(a ^ b for a, b in zip(x, py))


# ---------------------------------------------------------------------------
# The group Z2^a x Z4^b
# ---------------------------------------------------------------------------


class PointSpace:
    """Vectorised view of Z2^a x Z4^b in canonical (lexicographic) order.

    Binary digits are most significant; within each part the first digit is
    the most significant one.
    """

    def __init__(self, a: int, b: int):
        if a < 0 or b < 0:
            raise ValueError("group ranks must be non-negative")
        self.a = a
        self.b = b
        self.moduli = np.array([2] * a + [4] * b, dtype=np.int64)
        self.size = (2**a) * (4**b)
        w = np.ones(a + b, dtype=np.int64)
        for k in range(a + b - 2, -1, -1):
            w[k] = w[k + 1] * self.moduli[k + 1]
        self.weights = w
        idx = np.arange(self.size, dtype=np.int64)
        self.digits = (idx[:, None] // w[None, :]) % self.moduli[None, :] if a + b else np.zeros((1, 0), np.int64)
        self.neg = self.index((-self.digits) % self.moduli)
        self.order_le2 = np.all(self.digits[:, a:] % 2 == 0, axis=1)

    def index(self, digits: np.ndarray) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self.weights

    def add(self, i, j):
        return self.index((self.digits[i] + self.digits[j]) % self.moduli)


@lru_cache(maxsize=None)
def point_space(a: int, b: int) -> PointSpace:
    return PointSpace(a, b)


@dataclass(frozen=True)
class GroupPoint:
    """Element of Z2^a x Z4^b; doubles as a coordinate label of a code."""

    a: int
    b: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.x) != self.a or len(self.y) != self.b:
            raise ValueError("GroupPoint lengths do not match its signature")
        if any(v not in (0, 1) for v in self.x) or any(v not in (0, 1, 2, 3) for v in self.y):
            raise ValueError(f"GroupPoint digit out of range: {self.x} | {self.y}")

    @classmethod
    def zero(cls, a: int, b: int) -> "GroupPoint":
        return cls(a, b, (0,) * a, (0,) * b)

    @classmethod
    def from_index(cls, a: int, b: int, i: int) -> "GroupPoint":
        d = point_space(a, b).digits[i]
        return cls(a, b, tuple(int(v) for v in d[:a]), tuple(int(v) for v in d[a:]))

    @classmethod
    def from_digits(cls, a: int, b: int, digits: Iterable[int]) -> "GroupPoint":
        d = [int(v) for v in digits]
        return cls(a, b, tuple(v % 2 for v in d[:a]), tuple(v % 4 for v in d[a:]))

    @property
    def signature(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def digits(self) -> tuple[int, ...]:
        return self.x + self.y

    @property
    def index(self) -> int:
        return int(np.dot(self.digits, point_space(self.a, self.b).weights)) if self.digits else 0

    @property
    def order(self) -> int:
        if any(v % 2 for v in self.y):
            return 4
        if any(self.x) or any(self.y):
            return 2
        return 1

    def _check(self, other: "GroupPoint") -> None:
        if self.signature != other.signature:
            raise ValueError(f"signature mismatch {self.signature} vs {other.signature}")

    def __add__(self, other: "GroupPoint") -> "GroupPoint":
        self._check(other)
        return GroupPoint(
            self.a,
            self.b,
            tuple(u ^ v for u, v in zip(self.x, other.x)),
            tuple((u + v) % 4 for u, v in zip(self.y, other.y)),
        )

    def __neg__(self) -> "GroupPoint":
        return negate_point(self)

    def __sub__(self, other: "GroupPoint") -> "GroupPoint":
        return self + negate_point(other)

    def scale(self, k: int) -> "GroupPoint":
        return GroupPoint.from_digits(self.a, self.b, [k * v for v in self.digits])

    def __str__(self) -> str:
        return "".join(map(str, self.x)) + "|" + "".join(map(str, self.y))


def enumerate_points(a: int, b: int) -> list[GroupPoint]:
    return [GroupPoint.from_index(a, b, i) for i in range(point_space(a, b).size)]


def negate_point(p: GroupPoint) -> GroupPoint:
    return GroupPoint(p.a, p.b, p.x, tuple((-v) % 4 for v in p.y))


@dataclass(frozen=True)
class AffineMap:
    """Affine map of Z2^a x Z4^b: p -> lambda(p) + translation.

    ``images`` are the images of the canonical generators, binary ones first.
    """

    a: int
    b: int
    images: tuple[GroupPoint, ...]
    translation: GroupPoint

    def __post_init__(self) -> None:
        if len(self.images) != self.a + self.b:
            raise ValueError(f"need {self.a + self.b} generator images, got {len(self.images)}")
        for p in (*self.images, self.translation):
            if p.signature != (self.a, self.b):
                raise ValueError("generator image or translation has the wrong signature")
        for k in range(self.a):
            if self.images[k].order > 2:
                raise ValueError(f"image of binary generator {k} has order 4")

    @classmethod
    def identity(cls, a: int, b: int) -> "AffineMap":
        gens = [GroupPoint.from_digits(a, b, [int(i == k) for i in range(a + b)]) for k in range(a + b)]
        return cls(a, b, tuple(gens), GroupPoint.zero(a, b))

    @classmethod
    def from_matrix(cls, a: int, b: int, matrix, translation) -> "AffineMap":
        rows = [GroupPoint.from_digits(a, b, r) for r in np.asarray(matrix).reshape(a + b, a + b)]
        return cls(a, b, tuple(rows), GroupPoint.from_digits(a, b, translation))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([p.digits for p in self.images], dtype=np.int64).reshape(self.a + self.b, self.a + self.b)

    def linear(self, p: GroupPoint) -> GroupPoint:
        if p.signature != (self.a, self.b):
            raise ValueError(f"point signature {p.signature} != map signature {(self.a, self.b)}")
        acc = [0] * (self.a + self.b)
        for coef, img in zip(p.digits, self.images):
            for k, v in enumerate(img.digits):
                acc[k] += coef * v
        return GroupPoint.from_digits(self.a, self.b, acc)

    def __call__(self, p: GroupPoint) -> GroupPoint:
        return self.linear(p) + self.translation

    def table(self) -> np.ndarray:
        """Index of the image of every point, in canonical order."""
        sp = point_space(self.a, self.b)
        t = np.array(self.translation.digits, dtype=np.int64)
        return sp.index((sp.digits @ self.matrix + t) % sp.moduli)

    def is_bijective(self) -> bool:
        return len(np.unique(self.table())) == point_space(self.a, self.b).size

    def then(self, other: "AffineMap") -> "AffineMap":
        """The map p -> other(self(p))."""
        return AffineMap(
            self.a,
            self.b,
            tuple(other.linear(img) for img in self.images),
            other(self.translation),
        )


def affine_apply(m: AffineMap, p: GroupPoint) -> GroupPoint:
    return m(p)
