"""Affine-function families and the Hadamard codes built from them.

Family B(gamma, delta_dot): all affine maps Z2^gamma x Z4^delta_dot -> Z4,
Gray-expanded point by point.  Family C(gamma_dot, delta): the affine maps
Z2^gamma_dot x Z4^delta -> Z4 with f(0) in {0, 2}, one binary coordinate per
point via phi+.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .algebra import CodeType, CoordPerm, GroupPoint, MixedWord, gray_inv, phi_ext, point_space
from .codes import AdditiveCode, BinaryCode, bits_to_int, ints_to_rows, rows_to_ints


@dataclass(frozen=True)
class AffineFunctional:
    """f(p) = sum 2*m_i*x_i + sum k_j*y_j + c  (mod 4) on Z2^a x Z4^b."""

    a: int
    b: int
    m: tuple[int, ...]
    k: tuple[int, ...]
    c: int

    def __post_init__(self) -> None:
        if len(self.m) != self.a or len(self.k) != self.b:
            raise ValueError("coefficient lengths do not match the domain signature")
        if any(v not in (0, 1) for v in self.m) or any(v not in range(4) for v in self.k) or self.c not in range(4):
            raise ValueError("coefficient out of range")

    def __call__(self, p: GroupPoint) -> int:
        return (2 * sum(mi * xi for mi, xi in zip(self.m, p.x)) + sum(kj * yj for kj, yj in zip(self.k, p.y)) + self.c) % 4

    @property
    def in_A(self) -> bool:
        return self.c in (0, 2)

    def values(self) -> np.ndarray:
        return value_tables([self])[0]

    def __add__(self, other: "AffineFunctional") -> "AffineFunctional":
        return AffineFunctional(
            self.a,
            self.b,
            tuple(u ^ v for u, v in zip(self.m, other.m)),
            tuple((u + v) % 4 for u, v in zip(self.k, other.k)),
            (self.c + other.c) % 4,
        )


def value_tables(funcs: Sequence[AffineFunctional]) -> np.ndarray:
    """Values of every functional at every point, shape (len(funcs), 2^a 4^b)."""
    a, b = funcs[0].a, funcs[0].b
    sp = point_space(a, b)
    coef = np.array([[2 * v for v in f.m] + list(f.k) for f in funcs], dtype=np.int64).reshape(len(funcs), a + b)
    const = np.array([f.c for f in funcs], dtype=np.int64)
    return (coef @ sp.digits.T + const[:, None]) % 4


def _functionals(a: int, b: int, constants: Sequence[int]) -> list[AffineFunctional]:
    return [
        AffineFunctional(a, b, m, k, c)
        for m in itertools.product((0, 1), repeat=a)
        for k in itertools.product(range(4), repeat=b)
        for c in constants
    ]


def enumerate_B_functions(gamma: int, delta_dot: int) -> list[AffineFunctional]:
    return _functionals(gamma, delta_dot, (0, 1, 2, 3))


def enumerate_A_functions(gamma_dot: int, delta: int) -> list[AffineFunctional]:
    return _functionals(gamma_dot, delta, (0, 2))


@dataclass(frozen=True)
class PointLayout:
    """Correspondence between binary coordinates and group points.

    Family C: binary coordinate i is point i.  The mixed (Phi) view lists the
    points of order <= 2 first, then one Gray pair per opposite pair
    {v, -v}; the pair for representative v occupies mixed positions
    (alpha+2m, alpha+2m+1) and holds the point coordinates (-v, v).
    Family B: quaternary coordinate j is point j, Gray pair at (2j, 2j+1),
    so the point layout already is the Phi layout.
    """

    family: str
    a: int
    b: int
    order2: tuple[int, ...] = ()
    reps: tuple[int, ...] = ()

    @classmethod
    def for_C(cls, gamma_dot: int, delta: int) -> "PointLayout":
        sp = point_space(gamma_dot, delta)
        order2 = tuple(int(i) for i in np.flatnonzero(sp.order_le2))
        reps = [i for i in range(sp.size) if not sp.order_le2[i] and i < sp.neg[i]]
        # pairs grouped by which quaternary digits are odd, then by index;
        # this reproduces the column order of the published examples
        odd = sp.digits[:, gamma_dot:] % 2
        reps.sort(key=lambda i: (tuple(int(v) for v in odd[i]), i))
        return cls("C", gamma_dot, delta, order2, tuple(reps))

    @classmethod
    def for_B(cls, gamma: int, delta_dot: int) -> "PointLayout":
        return cls("B", gamma, delta_dot)

    @property
    def n(self) -> int:
        size = point_space(self.a, self.b).size
        return size if self.family == "C" else 2 * size

    @property
    def alpha(self) -> int:
        return len(self.order2) if self.family == "C" else 0

    @property
    def beta(self) -> int:
        return len(self.reps) if self.family == "C" else point_space(self.a, self.b).size

    @cached_property
    def mixed_positions(self) -> np.ndarray:
        """Entry k is the point-layout coordinate shown at mixed position k."""
        if self.family == "B":
            return np.arange(self.n)
        neg = point_space(self.a, self.b).neg
        out = list(self.order2)
        for v in self.reps:
            out += [int(neg[v]), v]
        return np.array(out, dtype=np.int64)

    def to_mixed_perm(self) -> CoordPerm:
        """Permutation taking point-layout coordinates to mixed positions."""
        images = np.empty(self.n, dtype=np.int64)
        images[self.mixed_positions] = np.arange(self.n)
        return CoordPerm(tuple(images))

    def to_mixed(self, w: int) -> int:
        out = 0
        for k, i in enumerate(self.mixed_positions):
            if (w >> int(i)) & 1:
                out |= 1 << k
        return out

    def to_point(self, w: int) -> int:
        out = 0
        for k, i in enumerate(self.mixed_positions):
            if (w >> k) & 1:
                out |= 1 << int(i)
        return out

    def mixed_code(self, code: BinaryCode) -> BinaryCode:
        t = code.type
        return BinaryCode(self.n, frozenset(self.to_mixed(w) for w in code.words), t)

    def mixed_word(self, w: int) -> MixedWord:
        """Read a point-layout binary word as a mixed word."""
        m = self.to_mixed(w)
        bits = tuple((m >> k) & 1 for k in range(self.alpha))
        pairs = [(m >> k) & 1 for k in range(self.alpha, self.n)]
        return MixedWord(self.alpha, self.beta, bits, gray_inv(pairs))

    def point_word(self, m: MixedWord) -> int:
        return self.to_point(bits_to_int(phi_ext(m)))


class Construction(NamedTuple):
    binary: BinaryCode
    additive: AdditiveCode
    layout: PointLayout


def _b_type(gamma: int, delta_dot: int) -> CodeType:
    return CodeType(0, point_space(gamma, delta_dot).size, gamma, delta_dot + 1)


def _c_type(gamma_dot: int, delta: int) -> CodeType:
    size = point_space(gamma_dot, delta).size
    alpha = 2 ** (gamma_dot + delta)
    return CodeType(alpha, (size - alpha) // 2, gamma_dot + 1, delta)


def build_B(gamma: int, delta_dot: int) -> Construction:
    funcs = enumerate_B_functions(gamma, delta_dot)
    vals = value_tables(funcs)
    t = _b_type(gamma, delta_dot)
    mat = np.empty((len(funcs), 2 * vals.shape[1]), dtype=np.uint8)
    mat[:, 0::2] = vals >= 2
    mat[:, 1::2] = (vals == 1) | (vals == 2)
    binary = BinaryCode(t.n, frozenset(rows_to_ints(mat)), t)
    words = frozenset(MixedWord(0, t.beta, (), tuple(int(v) for v in row)) for row in vals)
    additive = AdditiveCode(t, words, "B", (gamma, delta_dot))
    return Construction(binary, additive, PointLayout.for_B(gamma, delta_dot))


def build_C(gamma_dot: int, delta: int) -> Construction:
    funcs = enumerate_A_functions(gamma_dot, delta)
    vals = value_tables(funcs)
    t = _c_type(gamma_dot, delta)
    layout = PointLayout.for_C(gamma_dot, delta)
    mat = ((vals == 1) | (vals == 2)).astype(np.uint8)
    binary = BinaryCode(t.n, frozenset(rows_to_ints(mat)), t)
    o2, reps = list(layout.order2), list(layout.reps)
    words = frozenset(
        MixedWord(t.alpha, t.beta, tuple(int(v) // 2 for v in row[o2]), tuple(int(v) for v in row[reps])) for row in vals
    )
    additive = AdditiveCode(t, words, "C", (gamma_dot, delta))
    return Construction(binary, additive, layout)


def build(family: str, p: int, q: int) -> Construction:
    if family == "B":
        return build_B(p, q)
    if family == "C":
        return build_C(p, q)
    raise ValueError(f"unknown family {family!r}; expected 'B' or 'C'")


# ---------------------------------------------------------------------------
# Generator matrices G, K and the coset representatives S
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    """Rows are binary words (ints) of length n in the point layout."""

    name: str
    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...]

    def bits(self) -> np.ndarray:
        return ints_to_rows(self.rows, self.n)

    def mixed(self, layout: PointLayout) -> list[MixedWord]:
        return [layout.mixed_word(r) for r in self.rows]

    def columns(self, layout: PointLayout | None = None) -> list[tuple]:
        """Column tuples: binary columns first, then one quaternary column per pair."""
        if layout is None:
            return [tuple(int(v) for v in col) for col in self.bits().T]
        ms = self.mixed(layout)
        cols = [tuple(m.bits[i] for m in ms) for i in range(layout.alpha)]
        cols += [tuple(m.quats[j] for m in ms) for j in range(layout.beta)]
        return cols


@dataclass(frozen=True)
class GeneratorMatrices:
    G: Matrix
    K: Matrix
    S: Matrix
    layout: PointLayout


def _phi_plus_word(gamma_dot: int, delta: int, m: Sequence[int], k: Sequence[int], c: int) -> int:
    vals = AffineFunctional(gamma_dot, delta, tuple(m), tuple(k), c).values()
    return rows_to_ints(((vals == 1) | (vals == 2)).astype(np.uint8)[None, :])[0]


def _unit(length: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(length))


def _ywords(gamma_dot: int, delta: int) -> tuple[int, list[int], list[int]]:
    g, d = gamma_dot, delta
    y = _phi_plus_word(g, d, (0,) * g, (0,) * d, 2)
    us = [_phi_plus_word(g, d, _unit(g, i), (0,) * d, 0) for i in range(g)]
    vs = [_phi_plus_word(g, d, (0,) * g, _unit(d, j), 0) for j in range(d)]
    return y, us, vs


def star_int(x: int, y: int, alpha: int, beta: int) -> int:
    """x * y on packed words in the Phi layout (bit i = coordinate i)."""
    first = 0
    for i in range(beta):
        first |= 1 << (alpha + 2 * i)
    swap = (x ^ (x >> 1)) & first
    t = (y ^ (y >> 1)) & swap
    return x ^ y ^ t ^ (t << 1)


def _star_point(layout: PointLayout, x: int, y: int) -> int:
    mx, my = layout.to_mixed(x), layout.to_mixed(y)
    return layout.to_point(star_int(mx, my, layout.alpha, layout.beta))


def build_G(gamma_dot: int, delta: int) -> Matrix:
    y, us, vs = _ywords(gamma_dot, delta)
    labels = ("y", *(f"u{i + 1}" for i in range(gamma_dot)), *(f"v{j + 1}" for j in range(delta)))
    return Matrix("G", point_space(gamma_dot, delta).size, (y, *us, *vs), labels)


def build_K(gamma_dot: int, delta: int) -> Matrix:
    y, us, vs = _ywords(gamma_dot, delta)
    layout = PointLayout.for_C(gamma_dot, delta)
    ws = [_star_point(layout, v, v) for v in vs]
    labels = ("y", *(f"w{j + 1}" for j in range(delta)), *(f"u{i + 1}" for i in range(gamma_dot)))
    return Matrix("K", layout.n, (y, *ws, *us), labels)


def s_vectors(delta: int) -> list[tuple[int, ...]]:
    """All s in {0,1}^delta with s_1 varying fastest."""
    return [tuple((k >> j) & 1 for j in range(delta)) for k in range(2**delta)]


def build_S(gamma_dot: int, delta: int) -> Matrix:
    _, _, vs = _ywords(gamma_dot, delta)
    layout = PointLayout.for_C(gamma_dot, delta)
    mvs = [layout.to_mixed(v) for v in vs]
    rows, labels = [], []
    for s in s_vectors(delta):
        acc = 0
        for sj, v in zip(s, mvs):
            if sj:
                acc = star_int(acc, v, layout.alpha, layout.beta)
        rows.append(layout.to_point(acc))
        labels.append("v(" + "".join(map(str, s)) + ")")
    return Matrix("S", layout.n, tuple(rows), tuple(labels))


def generator_matrices(gamma_dot: int, delta: int) -> GeneratorMatrices:
    return GeneratorMatrices(
        build_G(gamma_dot, delta), build_K(gamma_dot, delta), build_S(gamma_dot, delta), PointLayout.for_C(gamma_dot, delta)
    )


def star_to_plus(s: Sequence[int], gamma_dot: int, delta: int) -> int:
    """sum s_j v_j + sum_{j<j'} s_j s_j' (w_j . w_j'), all over GF(2)."""
    if len(s) != delta or any(v not in (0, 1) for v in s):
        raise ValueError(f"s must be a 0/1 vector of length {delta}")
    G = build_G(gamma_dot, delta)
    K = build_K(gamma_dot, delta)
    vs = G.rows[1 + gamma_dot :]
    ws = K.rows[1 : 1 + delta]
    out = 0
    for j in range(delta):
        if s[j]:
            out ^= vs[j]
    for j in range(delta):
        for jj in range(j + 1, delta):
            if s[j] and s[jj]:
                out ^= ws[j] & ws[jj]
    return out


def b_generator_matrices(gamma: int, delta_dot: int) -> GeneratorMatrices:
    """G/K/S analogues for B(gamma, delta_dot): order-2 generators 2x_i,
    order-4 generators the constant 1 and y_j; K doubles the order-4 rows."""
    g, d = gamma, delta_dot
    layout = PointLayout.for_B(g, d)
    n = layout.n

    def word(m, k, c):
        vals = AffineFunctional(g, d, tuple(m), tuple(k), c).values()
        mat = np.empty((1, n), dtype=np.uint8)
        mat[0, 0::2] = vals >= 2
        mat[0, 1::2] = (vals == 1) | (vals == 2)
        return rows_to_ints(mat)[0]

    zm, zk = (0,) * g, (0,) * d
    two = [word(_unit(g, i), zk, 0) for i in range(g)]
    four = [word(zm, zk, 1)] + [word(zm, _unit(d, j), 0) for j in range(d)]
    four_labels = ["1"] + [f"y{j + 1}" for j in range(d)]
    G = Matrix("G", n, (*two, *four), (*(f"2x{i + 1}" for i in range(g)), *four_labels))
    doubled = [star_int(v, v, 0, n // 2) for v in four]
    K = Matrix("K", n, (*two, *doubled), (*(f"2x{i + 1}" for i in range(g)), *(f"2*{lab}" for lab in four_labels)))
    rows, labels = [], []
    for s in s_vectors(len(four)):
        acc = 0
        for sj, v in zip(s, four):
            if sj:
                acc = star_int(acc, v, 0, n // 2)
        rows.append(acc)
        labels.append("v(" + "".join(map(str, s)) + ")")
    return GeneratorMatrices(G, K, Matrix("S", n, tuple(rows), tuple(labels)), layout)
