"""Automorphism groups of the additive and binary Hadamard codes.

Closed-form orders are evaluated from explicit generator-image counts; the
brute-force searches here are independent oracles for them.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterator, Sequence

import numpy as np

from .algebra import AffineMap, CoordPerm, GroupPoint, MonomialTransform, point_space
from .codes import AdditiveCode, BinaryCode
from .construct import PointLayout, build_C, build_K, build_S, s_vectors
from .equiv import SearchLimitError
from .invariants import block_partition, gf2_basis, kernel_partition, span_set
from .search import PermSearch

ENUMERATION_CAP = 2**12


# ---------------------------------------------------------------------------
# Affine bijections of Z2^a x Z4^b
# ---------------------------------------------------------------------------


def count_affine_bijections(a: int, b: int) -> int:
    translations = 2 ** (a + 2 * b)
    y_choices = prod(4**b * 2**a - 2**b * 2**a * 2 ** (j - 1) for j in range(1, b + 1))
    x_choices = prod(2**b * 2**a - 2**b * 2 ** (i - 1) for i in range(1, a + 1))
    return translations * y_choices * x_choices


def count_linear_bijections(a: int, b: int) -> int:
    return count_affine_bijections(a, b) // 2 ** (a + 2 * b)


def _span_with(sp, group: np.ndarray, g: int) -> np.ndarray:
    parts = [group]
    cur = group
    for _ in range(3):
        cur = sp.add(cur, np.full_like(cur, g))
        parts.append(cur)
    return np.unique(np.concatenate(parts))


def linear_bijection_matrices(a: int, b: int) -> Iterator[np.ndarray]:
    """Matrices (rows = generator images, binary generators first) of all
    automorphisms of Z2^a x Z4^b.  Order-4 images are chosen first, each
    enlarging the generated subgroup by a factor 4, then order-2 images, each
    doubling it."""
    sp = point_space(a, b)
    order4 = [i for i in range(sp.size) if not sp.order_le2[i]]
    order2 = [i for i in range(sp.size) if sp.order_le2[i] and i != 0]
    zero = np.array([0], dtype=np.int64)

    def choose_y(j: int, group: np.ndarray, chosen: list[int]):
        if j == b:
            yield from choose_x(0, group, chosen, [])
            return
        for g in order4:
            h = _span_with(sp, group, g)
            if len(h) == 4 * len(group):
                yield from choose_y(j + 1, h, chosen + [g])

    def choose_x(i: int, group: np.ndarray, ys: list[int], xs: list[int]):
        if i == a:
            yield np.vstack([sp.digits[xs + ys]]).reshape(a + b, a + b)
            return
        for g in order2:
            h = _span_with(sp, group, g)
            if len(h) == 2 * len(group):
                yield from choose_x(i + 1, h, ys, xs + [g])

    yield from choose_y(0, zero, [])


def enumerate_affine_bijections(a: int, b: int, cap: int = ENUMERATION_CAP) -> Iterator[AffineMap]:
    sp = point_space(a, b)
    if sp.size > cap:
        raise SearchLimitError(f"|Z2^{a} x Z4^{b}| = {sp.size} exceeds the enumeration cap {cap}")
    for mat in linear_bijection_matrices(a, b):
        for t in range(sp.size):
            yield AffineMap.from_matrix(a, b, mat, sp.digits[t])


def affine_tables(a: int, b: int, cap: int = ENUMERATION_CAP) -> Iterator[np.ndarray]:
    """Point permutation tables of all affine bijections (fast path)."""
    sp = point_space(a, b)
    if sp.size > cap:
        raise SearchLimitError(f"|Z2^{a} x Z4^{b}| = {sp.size} exceeds the enumeration cap {cap}")
    for mat in linear_bijection_matrices(a, b):
        lin = (sp.digits @ mat) % sp.moduli
        for t in range(sp.size):
            yield sp.index((lin + sp.digits[t]) % sp.moduli)


def random_affine_bijection(a: int, b: int, rng: np.random.Generator) -> AffineMap:
    sp = point_space(a, b)
    while True:
        mat = np.zeros((a + b, a + b), dtype=np.int64)
        for g in range(a):
            mat[g] = sp.digits[rng.choice(np.flatnonzero(sp.order_le2))]
        for g in range(a, a + b):
            mat[g] = sp.digits[rng.integers(sp.size)]
        if len(np.unique(sp.index((sp.digits @ mat) % sp.moduli))) == sp.size:
            return AffineMap.from_matrix(a, b, mat, sp.digits[rng.integers(sp.size)])


def is_negation_preserving(m: AffineMap, exhaustive: bool = False) -> bool:
    """m(-p) = -m(p) for all p.  Equivalent to 2*translation = 0."""
    if not exhaustive:
        return m.translation.order <= 2
    sp = point_space(m.a, m.b)
    tab = m.table()
    return bool(np.array_equal(tab[sp.neg], sp.neg[tab]))


def is_affine_point_map(table: Sequence[int], a: int, b: int) -> bool:
    """Check f(0) - f(x) - f(y) + f(x+y) = 0 for all x, y."""
    sp = point_space(a, b)
    f = np.asarray(table)
    fd = sp.digits[f]
    n = sp.size
    xs = np.repeat(np.arange(n), n)
    ys = np.tile(np.arange(n), n)
    s = sp.add(xs, ys)
    lhs = (fd[0][None, :] - fd[xs] - fd[ys] + fd[s]) % sp.moduli
    return not lhs.any()


# ---------------------------------------------------------------------------
# Monomial automorphisms of B: tau_r rho_r sigma
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignFunction:
    """Affine r: Z2^a x Z4^b -> {1, 3}: constant in {1,3}, binary terms 2*m_i*x_i,
    quaternary coefficients in {0, 2}."""

    a: int
    b: int
    const: int
    m: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.const not in (1, 3):
            raise ValueError("sign function constant must be 1 or 3")
        if len(self.m) != self.a or len(self.k) != self.b:
            raise ValueError("coefficient lengths do not match the domain signature")
        if any(v not in (0, 1) for v in self.m) or any(v not in (0, 2) for v in self.k):
            raise ValueError("sign function coefficients out of range")

    @classmethod
    def constant(cls, a: int, b: int, c: int = 1) -> "SignFunction":
        return cls(a, b, c, (0,) * a, (0,) * b)

    def values(self) -> np.ndarray:
        sp = point_space(self.a, self.b)
        coef = np.array([2 * v for v in self.m] + list(self.k), dtype=np.int64)
        return (sp.digits @ coef + self.const) % 4

    def __call__(self, p: GroupPoint) -> int:
        return int(self.values()[p.index])

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.values() == 3)]


def enumerate_sign_functions(a: int, b: int) -> list[SignFunction]:
    return [
        SignFunction(a, b, c, m, k)
        for c in (1, 3)
        for m in itertools.product((0, 1), repeat=a)
        for k in itertools.product((0, 2), repeat=b)
    ]


def monomial_tau_rho_sigma(r: SignFunction, sigma: AffineMap) -> MonomialTransform:
    """f -> (v -> r(v) * f(sigma^-1(r(v) v))) as a monomial map of the B code."""
    if (r.a, r.b) != (sigma.a, sigma.b):
        raise ValueError("sign function and affine map live on different groups")
    sp = point_space(r.a, r.b)
    rv = r.values()
    st = sigma.table()
    # coordinate u is sent to v = r(sigma(u)) * sigma(u), and is negated when r(v) = 3
    images = np.where(rv[st] == 1, st, sp.neg[st])
    signs = tuple(bool(x) for x in rv[st] == 3)
    return MonomialTransform(CoordPerm(()), CoordPerm(tuple(images)), signs)


def apply_monomial(A: AdditiveCode, T: MonomialTransform) -> AdditiveCode:
    return AdditiveCode(A.type, frozenset(T.apply(m) for m in A.words), A.family, A.params)


# ---------------------------------------------------------------------------
# Orders
# ---------------------------------------------------------------------------


@dataclass
class GroupOrderReport:
    family: str
    params: dict
    order: int
    factors: dict = field(default_factory=dict)
    closed_form: int | None = None
    brute_checked: bool = False
    brute_order: int | None = None

    def as_dict(self) -> dict:
        out = {
            "family": self.family,
            "params": self.params,
            "order": str(self.order),
            "factors": {k: str(v) for k, v in self.factors.items()},
            "closed_form": None if self.closed_form is None else str(self.closed_form),
            "brute_checked": self.brute_checked,
            "brute_order": None if self.brute_order is None else str(self.brute_order),
        }
        return out


def _pow2_exact(twice_exponent: int) -> int:
    if twice_exponent % 2:
        raise ValueError("non-integral exponent of 2")
    return 2 ** (twice_exponent // 2)


def _mersenne_prod(k: int) -> int:
    return prod(2**i - 1 for i in range(1, k + 1))


def maut_B_closed_form(gamma: int, delta_dot: int) -> int:
    """Printed closed form, with the lone delta read as delta_dot."""
    g, d = gamma, delta_dot
    twice = g * g + 3 * g + 4 * g * d + 3 * d * d + 5 * d + 2
    return _pow2_exact(twice) * _mersenne_prod(g) * _mersenne_prod(d)


def maut_B_order(gamma: int, delta_dot: int) -> GroupOrderReport:
    g, d = gamma, delta_dot
    T = 2 ** (g + 2 * d)
    Y = prod(4**d * 2**g - 2**d * 2**g * 2 ** (j - 1) for j in range(1, d + 1))
    X = prod(2**d * 2**g - 2**d * 2 ** (i - 1) for i in range(1, g + 1))
    F = 2 ** (g + d + 1)
    return GroupOrderReport(
        "B", {"gamma": g, "delta_dot": d}, T * Y * X * F, {"T": T, "Y": Y, "X": X, "F": F}, maut_B_closed_form(g, d)
    )


def maut_C_closed_form(gamma_dot: int, delta: int) -> int:
    g, d = gamma_dot, delta
    twice = g * g + g + 4 * g * d + 3 * d * d + d
    return _pow2_exact(twice) * _mersenne_prod(g) * _mersenne_prod(d)


def maut_C_order(gamma_dot: int, delta: int) -> GroupOrderReport:
    """Negation-preserving affine bijections: translations of order <= 2 times
    all linear bijections."""
    g, d = gamma_dot, delta
    translations = 2 ** (g + d)
    linear = count_linear_bijections(g, d)
    return GroupOrderReport(
        "C",
        {"gamma_dot": g, "delta": d},
        translations * linear,
        {"translations": translations, "linear": linear},
        maut_C_closed_form(g, d),
    )


def general_affine_order(t: int) -> int:
    return 2**t * prod(2**t - 2**i for i in range(t))


def aut_C_closed_form(gamma_dot: int, delta: int) -> int:
    g, d = gamma_dot, delta
    if d <= 1:
        return general_affine_order(g + 2 * d)
    p = 6 if d == 2 else 1
    twice = g * (g + 1) + 4 * g * d + 3 * d * (d + 1)
    return p * _pow2_exact(twice) * _mersenne_prod(g) * _mersenne_prod(d)


def aut_C_order(gamma_dot: int, delta: int) -> GroupOrderReport:
    g, d = gamma_dot, delta
    params = {"gamma_dot": g, "delta": d}
    if d <= 1:
        t = g + 2 * d
        return GroupOrderReport("C", params, general_affine_order(t), {"GA": general_affine_order(t)}, aut_C_closed_form(g, d))
    affine = count_affine_bijections(g, d)
    p = 6 if d == 2 else 1
    return GroupOrderReport("C", params, p * affine, {"special": p, "affine": affine}, aut_C_closed_form(g, d))


# ---------------------------------------------------------------------------
# Coordinate actions
# ---------------------------------------------------------------------------


def coord_perm_from_affine(m: AffineMap, layout: PointLayout) -> CoordPerm:
    if (m.a, m.b) != (layout.a, layout.b):
        raise ValueError("affine map and layout live on different groups")
    tab = m.table()
    if len(np.unique(tab)) != len(tab):
        raise ValueError("affine map is not bijective")
    if layout.family == "C":
        return CoordPerm(tuple(tab))
    images = np.empty(2 * len(tab), dtype=np.int64)
    images[0::2] = 2 * tab
    images[1::2] = 2 * tab + 1
    return CoordPerm(tuple(images))


def as_monomial(perm: CoordPerm, layout: PointLayout) -> MonomialTransform | None:
    """Read a point-layout permutation of a C code as a monomial map of the
    additive code, if it keeps binary and Gray-pair coordinates apart."""
    pos = layout.mixed_positions
    where = np.empty_like(pos)
    where[pos] = np.arange(len(pos))
    q = [int(where[perm[int(i)]]) for i in pos]  # mixed position -> mixed position
    alpha, beta = layout.alpha, layout.beta
    if any(q[k] >= alpha for k in range(alpha)):
        return None
    quat, signs = [], []
    for j in range(beta):
        lo, hi = q[alpha + 2 * j], q[alpha + 2 * j + 1]
        if lo < alpha or hi < alpha or (lo - alpha) // 2 != (hi - alpha) // 2:
            return None
        quat.append((lo - alpha) // 2)
        signs.append(lo > hi)
    return MonomialTransform(CoordPerm(tuple(q[:alpha])), CoordPerm(tuple(quat)), tuple(signs))


def permute_word(w: int, images: Sequence[int]) -> int:
    out = 0
    for i, j in enumerate(images):
        if (w >> i) & 1:
            out |= 1 << j
    return out


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------


@dataclass
class AutResult:
    """Automorphism group found by search, as a stabilizer chain.

    ``transversals[i]`` maps each point of the orbit of ``base[i]`` under the
    pointwise stabilizer of ``base[:i]`` to one group element taking base[i]
    there.  Every group element is uniquely t_0 * t_1 * ... with t_i from
    transversals[i].
    """

    n: int
    base: list[int]
    transversals: list[dict[int, tuple[int, ...]]]

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def generators(self) -> list[CoordPerm]:
        gens = {p for t in self.transversals for p in t.values() if p != tuple(range(self.n))}
        return [CoordPerm(p) for p in sorted(gens)]

    def elements(self) -> Iterator[CoordPerm]:
        levels = [list(t.values()) for t in self.transversals]
        for combo in itertools.product(*levels):
            g = list(range(self.n))
            for t in reversed(combo):
                g = [t[i] for i in g]
            yield CoordPerm(tuple(g))

    def contains(self, perm: CoordPerm | Sequence[int]) -> bool:
        g = list(perm.images if isinstance(perm, CoordPerm) else perm)
        for b, trans in zip(self.base, self.transversals):
            x = g[b]
            if x not in trans:
                return False
            t = trans[x]
            inv = [0] * self.n
            for i, j in enumerate(t):
                inv[j] = i
            g = [inv[v] for v in g]
        return all(i == v for i, v in enumerate(g))


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q."""
    return tuple(p[i] for i in q)


def brute_force_aut(code: BinaryCode, n_max: int = 16, use_kernel_blocks: bool = True) -> AutResult:
    """Exact automorphism group of a binary code by backtracking.

    For each base point (coordinates in natural order) the orbit under the
    stabilizer of the earlier base points is found by searching, for every
    candidate image, for one automorphism realising it.
    """
    n = code.n
    if n > n_max:
        raise SearchLimitError(f"n={n} exceeds n_max={n_max}")
    blocks = kernel_partition(code).labels if use_kernel_blocks and 0 in code.words else None
    engine = PermSearch(code, code, blocks1=blocks, blocks2=blocks)
    ident = tuple(range(n))
    base = list(range(n))
    transversals = []
    for i, b in enumerate(base):
        fixed = {base[j]: base[j] for j in range(i)}
        orbit: dict[int, tuple[int, ...]] = {b: ident}
        found: list[tuple[int, ...]] = []
        for x in range(n):
            if x in orbit or x in fixed:
                continue
            sol = engine.first({**fixed, b: x})
            if sol is None:
                continue
            found.append(tuple(sol))
            frontier = list(orbit)
            while frontier:
                y = frontier.pop()
                for g in found:
                    z = g[y]
                    if z not in orbit:
                        orbit[z] = _compose(g, orbit[y])
                        frontier.append(z)
        transversals.append(orbit)
    return AutResult(n, base, transversals)


def enumerate_automorphisms(code: BinaryCode, n_max: int = 16, use_kernel_blocks: bool = True) -> list[CoordPerm]:
    """Every automorphism, by plain exhaustive backtracking (small groups only)."""
    if code.n > n_max:
        raise SearchLimitError(f"n={code.n} exceeds n_max={n_max}")
    blocks = kernel_partition(code).labels if use_kernel_blocks and 0 in code.words else None
    engine = PermSearch(code, code, blocks1=blocks, blocks2=blocks)
    return [CoordPerm(tuple(s)) for s in engine.solutions()]


def brute_force_maut(A: AdditiveCode, cap: int = 2**24, collect: bool = False):
    """Number of monomial maps (binary permutation, quaternary permutation,
    sign changes) preserving A.  With ``collect`` returns (order, transforms)."""
    alpha, beta = A.type.alpha, A.type.beta
    space = factorial(alpha) * factorial(beta) * 2**beta
    if space > cap:
        raise SearchLimitError(f"search space {space} exceeds cap {cap}")
    words = A.sorted_words()
    cols = [[w.bits[i] for w in words] for i in range(alpha)] + [[w.quats[j] for w in words] for j in range(beta)]
    ncols = [[(-v) % 4 for v in col] for col in cols]
    total = alpha + beta
    used = [False] * total
    images = [-1] * total
    signs = [False] * beta
    found: list[MonomialTransform] = []
    count = 0

    def rec(depth: int, k1: list[int], k2: list[int]) -> None:
        nonlocal count
        if depth == total:
            count += 1
            if collect:
                found.append(
                    MonomialTransform(
                        CoordPerm(tuple(images[:alpha])),
                        CoordPerm(tuple(i - alpha for i in images[alpha:])),
                        tuple(signs),
                    )
                )
            return
        shift = 2 * depth
        if depth < alpha:
            targets, sign_opts = range(alpha), (False,)
        else:
            targets, sign_opts = range(alpha, total), (False, True)
        for t in targets:
            if used[t]:
                continue
            tgt = [k | (v << shift) for k, v in zip(k2, cols[t])]
            st = sorted(tgt)
            for neg in sign_opts:
                src_col = ncols[depth] if neg else cols[depth]
                src = [k | (v << shift) for k, v in zip(k1, src_col)]
                if sorted(src) != st:
                    continue
                used[t] = True
                images[depth] = t
                if depth >= alpha:
                    signs[depth - alpha] = neg
                rec(depth + 1, src, tgt)
                used[t] = False
        images[depth] = -1

    rec(0, [0] * len(words), [0] * len(words))
    return (count, found) if collect else count


# ---------------------------------------------------------------------------
# The six exceptional automorphisms for delta = 2
# ---------------------------------------------------------------------------

# nonsingular 2x2 matrices over GF(2), identity first; column j is sigma(e_j)
GL22: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = tuple(
    m
    for m in (
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
        ((1, 1), (0, 1)),
        ((1, 0), (1, 1)),
        ((0, 1), (1, 1)),
        ((1, 1), (1, 0)),
    )
)


def _apply_gf2(mat, s: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(mat[r][c] * s[c] for c in range(len(s))) % 2 for r in range(len(mat)))


def induced_sigma(perm: CoordPerm | Sequence[int], gamma_dot: int, delta: int) -> dict | None:
    """s -> s' with perm(v(s)) in v(s') + Ker(C), or None if some image leaves C."""
    images = perm.images if isinstance(perm, CoordPerm) else perm
    S = build_S(gamma_dot, delta)
    ker = span_set(build_K(gamma_dot, delta).rows)
    svecs = s_vectors(delta)
    out = {}
    for s, row in zip(svecs, S.rows):
        img = permute_word(row, images)
        hits = [s2 for s2, row2 in zip(svecs, S.rows) if (img ^ row2) in ker]
        if len(hits) != 1:
            return None
        out[s] = hits[0]
    return out


def sigma_matrix(sig: dict) -> tuple | None:
    """The GF(2) matrix of ``sig`` if it is linear, else None."""
    delta = len(next(iter(sig)))
    units = [tuple(int(i == j) for i in range(delta)) for j in range(delta)]
    cols = [sig[e] for e in units]
    mat = tuple(tuple(cols[c][r] for c in range(delta)) for r in range(delta))
    if all(_apply_gf2(mat, s) == sig[s] for s in sig):
        return mat
    return None


def block_stabilizing_automorphisms(gamma_dot: int, delta: int, n_max: int = 16) -> list[CoordPerm]:
    """All automorphisms of C(gamma_dot, delta) mapping every block onto itself."""
    con = build_C(gamma_dot, delta)
    if con.binary.n > n_max:
        raise SearchLimitError(f"n={con.binary.n} exceeds n_max={n_max}")
    blocks, _ = block_partition(gamma_dot, delta)
    members: dict[int, list[int]] = {}
    for i, lab in enumerate(blocks.labels):
        members.setdefault(lab, []).append(i)
    allowed = [members[lab] for lab in blocks.labels]
    engine = PermSearch(con.binary, con.binary, allowed=allowed)
    return [CoordPerm(tuple(s)) for s in engine.solutions()]


def _fixes_point_in_every_block(perm: CoordPerm, blocks) -> bool:
    return all(any(perm[i] == i for i in cls) for cls in blocks.classes)


@lru_cache(maxsize=None)
def _special_base() -> tuple[CoordPerm, ...]:
    blocks, _ = block_partition(0, 2)
    by_sigma: dict[tuple, CoordPerm] = {}
    for perm in block_stabilizing_automorphisms(0, 2):
        if not _fixes_point_in_every_block(perm, blocks):
            continue
        sig = induced_sigma(perm, 0, 2)
        mat = sigma_matrix(sig) if sig else None
        if mat is None:
            continue
        best = by_sigma.get(mat)
        if best is None or perm.images < best.images:
            by_sigma[mat] = perm
    missing = [m for m in GL22 if m not in by_sigma]
    if missing:
        raise RuntimeError(f"no block-stabilizing automorphism realises sigma in {missing}")
    return tuple(by_sigma[m] for m in GL22)


def special_delta2_automorphisms(gamma_dot: int) -> list[CoordPerm]:
    """Six block-stabilizing automorphisms of C(gamma_dot, 2), one per sigma in
    GL22 (same order), each fixing a coordinate of every block.

    Found by exhaustive search on Z4^2 and lifted by acting identically on the
    Z2^gamma_dot part.
    """
    base = _special_base()
    if gamma_dot == 0:
        return list(base)
    size = point_space(0, 2).size
    out = []
    for p in base:
        images = [x * size + p[y] for x in range(2**gamma_dot) for y in range(size)]
        out.append(CoordPerm(tuple(images)))
    return out


def count_negation_preserving(a: int, b: int, exhaustive: bool = False) -> int:
    """Filtered enumeration: affine bijections that commute with negation."""
    return sum(is_negation_preserving(m, exhaustive) for m in enumerate_affine_bijections(a, b))


# ---------------------------------------------------------------------------
# Sampling automorphisms
# ---------------------------------------------------------------------------


def _random_gl2(t: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        mat = rng.integers(0, 2, size=(t, t))
        if len(gf2_basis(int("".join(map(str, row)), 2) for row in mat)) == t:
            return mat


def random_linear_code_automorphism(code: BinaryCode, rng: np.random.Generator) -> CoordPerm:
    """Random element of the affine group acting on a binary linear Hadamard code.

    Coordinates are identified with points x_i of GF(2)^t through the columns
    (1, x_i) of a generator matrix whose first row is all-ones.
    """
    n = code.n
    ones = (1 << n) - 1
    if ones not in code.words:
        raise ValueError("code does not contain the all-ones word")
    # a basis through the all-ones word keeps it as its own pivot
    basis = [r for r in gf2_basis([ones, *code.words]) if r != ones]
    t = len(basis)
    if 2**t != n:
        raise ValueError("not a linear Hadamard code")
    cols = np.array([[(r >> i) & 1 for r in basis] for i in range(n)], dtype=np.int64)
    weights = 1 << np.arange(t)
    where = np.full(n, -1, dtype=np.int64)
    where[cols @ weights] = np.arange(n)
    if (where < 0).any():
        raise ValueError("columns do not cover GF(2)^t")
    A = _random_gl2(t, rng)
    b = rng.integers(0, 2, size=t)
    images = where[(((cols @ A.T) + b) % 2) @ weights]
    return CoordPerm(tuple(int(i) for i in images))


def random_automorphism(gamma_dot: int, delta: int, rng: np.random.Generator) -> CoordPerm:
    """Random permutation automorphism of C(gamma_dot, delta) (point layout)."""
    if delta <= 1:
        return random_linear_code_automorphism(build_C(gamma_dot, delta).binary, rng)
    layout = PointLayout.for_C(gamma_dot, delta)
    perm = coord_perm_from_affine(random_affine_bijection(gamma_dot, delta, rng), layout)
    if delta == 2:
        specials = special_delta2_automorphisms(gamma_dot)
        perm = perm.compose(specials[int(rng.integers(len(specials)))])
    return perm
