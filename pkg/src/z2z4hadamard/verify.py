"""Named self-checks grouped into families, run by the ``verify`` subcommand."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import autgrp
from .construct import build_B, build_C, build_K, build_S, s_vectors, star_to_plus
from .equiv import SearchLimitError, apply_coord_perm, class_count, classify, theorem1_permutation
from .invariants import (
    block_partition,
    has_hadamard_spectrum,
    is_hadamard,
    kernel_dimension,
    kernel_of,
    kernel_via_star,
    span_set,
)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"
FAMILIES = ("constructions", "kernel", "eq2", "theorem1", "classify", "maut", "aut")


@dataclass
class VerifyPlan:
    t_max: int = 6
    constructions: bool = True
    kernel: bool = True
    eq2: bool = True
    theorem1: bool = True
    classify: bool = True
    maut: bool = True
    aut: bool = True
    n_max: int = 16
    maut_cap: int = 2**24
    affine_samples: int = 10_000
    block_samples: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if self.t_max < 3:
            raise ValueError("t_max must be at least 3")
        for name in ("n_max", "maut_cap", "affine_samples", "block_samples"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def enabled(self) -> list[str]:
        return [f for f in FAMILIES if getattr(self, f)]

    @classmethod
    def only(cls, families, **kw) -> "VerifyPlan":
        flags = {f: f in families for f in FAMILIES}
        return cls(**flags, **kw)


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status:<8}{self.name}" + (f"  ({self.detail})" if self.detail else "")


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def counts(self) -> dict[str, int]:
        return {s: sum(r.status == s for r in self.results) for s in (PASS, FAIL, SKIPPED)}

    def text(self) -> str:
        c = self.counts()
        summary = f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped"
        return "\n".join([r.line() for r in self.results] + [summary])


def _c_params(t_max: int) -> Iterator[tuple[int, int]]:
    for t in range(1, t_max + 1):
        for d in range(t // 2 + 1):
            yield t - 2 * d, d


def _b_params(t_max: int) -> Iterator[tuple[int, int]]:
    for t in range(1, t_max + 1):
        for d in range((t - 1) // 2 + 1):
            yield t - 1 - 2 * d, d


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> CheckResult:
    try:
        out = fn()
    except SearchLimitError as exc:
        return CheckResult(name, SKIPPED, str(exc))
    ok, detail = out if isinstance(out, tuple) else (out, "")
    return CheckResult(name, PASS if ok else FAIL, detail)


def check_constructions(plan: VerifyPlan) -> Iterator[CheckResult]:
    def one(family, params):
        con = build_C(*params) if family == "C" else build_B(*params)
        code = con.binary
        ok = is_hadamard(code) and has_hadamard_spectrum(code) and con.additive.is_additive()
        ok = ok and con.layout.mixed_code(code) == con.additive.gray_image()
        return ok, f"n={code.n}"

    for p in _c_params(plan.t_max):
        yield _check(f"constructions/C{p}", lambda p=p: one("C", p))
    for p in _b_params(plan.t_max):
        yield _check(f"constructions/B{p}", lambda p=p: one("B", p))


def check_kernel(plan: VerifyPlan) -> Iterator[CheckResult]:
    def one(g, d):
        con = build_C(g, d)
        ker = kernel_of(con.binary).words
        star = {con.layout.to_point(w) for w in kernel_via_star(con.layout.mixed_code(con.binary)).words}
        rows = span_set(build_K(g, d).rows)
        if d == 1:
            # linear code: the kernel is the whole code, K spans the order-2 part
            return star == rows and ker == con.binary.words, "linear, kernel = C"
        dim = kernel_dimension(con.binary)
        return star == rows == ker and dim == 1 + d + g, f"dim={dim}"

    for g, d in _c_params(plan.t_max):
        yield _check(f"kernel/C{(g, d)}", lambda g=g, d=d: one(g, d))


def check_eq2(plan: VerifyPlan) -> Iterator[CheckResult]:
    def one(g, d):
        S = build_S(g, d)
        return all(row == star_to_plus(s, g, d) for s, row in zip(s_vectors(d), S.rows)), f"{len(S.rows)} rows"

    for g, d in _c_params(plan.t_max):
        if d >= 1:
            yield _check(f"eq2/C{(g, d)}", lambda g=g, d=d: one(g, d))


def check_theorem1(plan: VerifyPlan) -> Iterator[CheckResult]:
    def one(g, d):
        image = apply_coord_perm(build_B(g, d).binary, theorem1_permutation(g, d))
        return image == build_C(g + 1, d).binary

    for g, d in _b_params(plan.t_max):
        yield _check(f"theorem1/B{(g, d)}->C{(g + 1, d)}", lambda g=g, d=d: one(g, d))


def check_classify(plan: VerifyPlan) -> Iterator[CheckResult]:
    for t in range(3, plan.t_max + 1):
        def one(t=t):
            k = class_count(classify(t))
            return k == t // 2, f"{k} classes"

        yield _check(f"classify/t={t}", one)


def _brute_vs_formula(brute: Callable[[], int], formula: int) -> tuple[bool, str]:
    got = brute()
    return got == formula, f"brute={got} formula={formula}"


def check_maut(plan: VerifyPlan) -> Iterator[CheckResult]:
    cap = plan.maut_cap
    for g, d in ((0, 1), (1, 1)):
        yield _check(
            f"maut/B{(g, d)}",
            lambda g=g, d=d: _brute_vs_formula(lambda: autgrp.brute_force_maut(build_B(g, d).additive, cap), autgrp.maut_B_order(g, d).order),
        )
    yield _check(
        "maut/C(1, 1)",
        lambda: _brute_vs_formula(lambda: autgrp.brute_force_maut(build_C(1, 1).additive, cap), autgrp.maut_C_order(1, 1).order),
    )
    for g, d in ((0, 1), (0, 2), (1, 1)):
        yield _check(
            f"maut/negation-preserving count {(g, d)}",
            lambda g=g, d=d: _brute_vs_formula(lambda: autgrp.count_negation_preserving(g, d), autgrp.maut_C_order(g, d).order),
        )

    def closed_forms():
        pairs = [(g, d) for g in range(4) for d in range(4)]
        ok = all(autgrp.maut_B_order(g, d).order == autgrp.maut_B_closed_form(g, d) for g, d in pairs)
        ok = ok and all(autgrp.maut_C_order(g, d).order == autgrp.maut_C_closed_form(g, d) for g, d in pairs)
        return ok, f"{len(pairs)} parameter pairs"

    yield _check("maut/closed forms", closed_forms)

    def tau_rho_sigma():
        A = build_B(1, 1).additive
        maps = list(autgrp.enumerate_affine_bijections(1, 1))
        ok = all(
            autgrp.apply_monomial(A, autgrp.monomial_tau_rho_sigma(r, m)) == A
            for r in autgrp.enumerate_sign_functions(1, 1)
            for m in maps
        )
        return ok, f"{len(maps)} affine maps x 8 sign functions"

    yield _check("maut/tau-rho-sigma preserves B(1, 1)", tau_rho_sigma)


def check_aut(plan: VerifyPlan) -> Iterator[CheckResult]:
    rng = np.random.default_rng(plan.seed)
    yield _check(
        "aut/C(0, 2)",
        lambda: _brute_vs_formula(lambda: autgrp.brute_force_aut(build_C(0, 2).binary, plan.n_max).order, autgrp.aut_C_order(0, 2).order),
    )
    yield _check(
        "aut/linear Hadamard n=16",
        lambda: _brute_vs_formula(lambda: autgrp.brute_force_aut(build_C(4, 0).binary, plan.n_max).order, autgrp.aut_C_order(4, 0).order),
    )

    def closed_forms():
        pairs = [(g, d) for g in range(4) for d in range(5)]
        ok = all(autgrp.aut_C_order(g, d).order == autgrp.aut_C_closed_form(g, d) for g, d in pairs)
        return ok, f"{len(pairs)} parameter pairs"

    yield _check("aut/closed forms", closed_forms)

    def sampled_affine():
        con = build_C(0, 3)
        ok = all(
            con.binary.is_preserved_by(autgrp.coord_perm_from_affine(autgrp.random_affine_bijection(0, 3, rng), con.layout))
            for _ in range(plan.affine_samples)
        )
        ok = ok and autgrp.count_affine_bijections(0, 3) == autgrp.aut_C_order(0, 3).order == 5505024
        return ok, f"{plan.affine_samples} samples"

    yield _check("aut/random affine maps preserve C(0, 3)", sampled_affine)

    for g in (0, 1):
        def specials(g=g):
            con = build_C(g, 2)
            if con.binary.n > 2 * plan.n_max:
                raise SearchLimitError(f"n={con.binary.n} exceeds 2*n_max")
            perms = autgrp.special_delta2_automorphisms(g)
            blocks, _ = block_partition(g, 2)
            sigmas = [autgrp.sigma_matrix(autgrp.induced_sigma(p, g, 2)) for p in perms]
            affine = {tuple(int(i) for i in tab) for tab in autgrp.affine_tables(g, 2)}
            ok = all(con.binary.is_preserved_by(p) and blocks.is_stabilized_by(p) for p in perms)
            ok = ok and sigmas == list(autgrp.GL22)
            ok = ok and not any(p.images in affine for p in perms[1:])
            return ok, f"6 maps, {len(affine)} affine permutations compared"

        yield _check(f"aut/special delta=2 maps C({g}, 2)", specials)

    for g, d in _c_params(plan.t_max):
        if d < 2:
            continue

        def blocks_kept(g=g, d=d):
            con = build_C(g, d)
            blocks, macro = block_partition(g, d)
            perms = [autgrp.random_automorphism(g, d, rng) for _ in range(plan.block_samples)]
            ok = all(con.binary.is_preserved_by(p) and blocks.is_stabilized_by(p) and macro.is_stabilized_by(p) for p in perms)
            return ok, f"{plan.block_samples} samples"

        yield _check(f"aut/blocks stabilized C{(g, d)}", blocks_kept)

    def monomial_realizable():
        con = build_C(1, 2)
        agree = 0
        for _ in range(200):
            m = autgrp.random_affine_bijection(1, 2, rng)
            T = autgrp.as_monomial(autgrp.coord_perm_from_affine(m, con.layout), con.layout)
            realizable = T is not None and autgrp.apply_monomial(con.additive, T) == con.additive
            agree += realizable == autgrp.is_negation_preserving(m, exhaustive=True)
        return agree == 200, "200 samples"

    yield _check("aut/monomial iff negation-preserving C(1, 2)", monomial_realizable)


CHECKS = {
    "constructions": check_constructions,
    "kernel": check_kernel,
    "eq2": check_eq2,
    "theorem1": check_theorem1,
    "classify": check_classify,
    "maut": check_maut,
    "aut": check_aut,
}


def run(plan: VerifyPlan, emit: Callable[[str], None] | None = None) -> VerifyReport:
    report = VerifyReport()
    for family in plan.enabled():
        for res in CHECKS[family](plan):
            report.results.append(res)
            if emit:
                emit(res.line())
    return report
