"""Command-line front end: ``z2z4had <subcommand> ...``.

Exit codes: 0 success, 1 a check or comparison failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, autgrp, fileio
from .construct import b_generator_matrices, build, build_C, generator_matrices
from .equiv import SearchLimitError, class_count, classify, search_equivalence, theorem1_permutation
from .invariants import signature
from .verify import FAMILIES, VerifyPlan, run

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2
MAX_T = 12


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _table(rows: list[dict], cols: list[str]) -> str:
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _family_params(args) -> tuple[str, int, int]:
    """(family, p, q): C uses (gamma_dot, delta), B uses (gamma, delta_dot)."""
    fam = args.family
    if fam == "C":
        p, q = args.gamma_dot, args.delta
        names = "--gamma-dot/--delta"
    else:
        p, q = args.gamma, args.delta_dot
        names = "--gamma/--delta-dot"
    if p is None or q is None:
        raise UsageError(f"family {fam} needs {names}")
    if p < 0 or q < 0:
        raise UsageError("parameters must be non-negative")
    t = p + 2 * q + (1 if fam == "B" else 0)
    if t > MAX_T:
        raise UsageError(f"t={t} exceeds the supported maximum {MAX_T}")
    return fam, p, q


def _add_family_args(sp: argparse.ArgumentParser, required: bool = True) -> None:
    sp.add_argument("--family", choices=("B", "C"), default="C" if not required else None, required=required)
    sp.add_argument("--gamma-dot", type=int, help="C family: number of binary generators")
    sp.add_argument("--delta", type=int, help="C family: number of quaternary generators")
    sp.add_argument("--gamma", type=int, help="B family: binary part of the domain")
    sp.add_argument("--delta-dot", type=int, help="B family: quaternary part of the domain")


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    fam, p, q = _family_params(args)
    con = build(fam, p, q)
    chunks = [fileio.format_binary(con.binary) if args.binary else fileio.format_additive(con.additive)]
    if args.matrices:
        gm = generator_matrices(p, q) if fam == "C" else b_generator_matrices(p, q)
        for m in (gm.G, gm.K, gm.S):
            chunks.append(fileio.format_matrix(m) if args.binary else fileio.format_matrix(m, con.layout, con.binary.type))
    if args.out:
        fileio.save(args.out, *chunks)
        print(f"wrote {len(con.binary)} codewords of length {con.binary.n} to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write("".join(chunks))
    return EXIT_OK


# ---------------------------------------------------------------------------
# invariants / report
# ---------------------------------------------------------------------------


def _load_binary(path: str):
    try:
        code = fileio.load_code(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return fileio.to_binary(code)


def cmd_invariants(args) -> int:
    _emit_json(signature(_load_binary(args.file)).as_dict())
    return EXIT_OK


def _group_report(kind: str, args) -> autgrp.GroupOrderReport:
    if kind == "aut":
        if args.gamma_dot is None or args.delta is None:
            raise UsageError("aut needs --gamma-dot and --delta")
        if args.gamma_dot < 0 or args.delta < 0:
            raise UsageError("parameters must be non-negative")
        rep = autgrp.aut_C_order(args.gamma_dot, args.delta)
        if args.brute:
            try:
                rep.brute_order = autgrp.brute_force_aut(build_C(args.gamma_dot, args.delta).binary, args.n_max).order
                rep.brute_checked = True
            except SearchLimitError as exc:
                print(f"brute force skipped: {exc}", file=sys.stderr)
        return rep
    fam, p, q = _family_params(args)
    rep = autgrp.maut_B_order(p, q) if fam == "B" else autgrp.maut_C_order(p, q)
    if args.brute:
        try:
            rep.brute_order = autgrp.brute_force_maut(build(fam, p, q).additive, args.search_cap)
            rep.brute_checked = True
        except SearchLimitError as exc:
            print(f"brute force skipped: {exc}", file=sys.stderr)
    return rep


def _group_text(rep: autgrp.GroupOrderReport) -> str:
    rows = [{"quantity": "order", "value": rep.order}]
    rows += [{"quantity": k, "value": v} for k, v in rep.factors.items()]
    rows.append({"quantity": "closed form", "value": rep.closed_form})
    if rep.brute_checked:
        rows.append({"quantity": "brute force", "value": rep.brute_order})
    return _table(rows, ["quantity", "value"])


def _group_exit(rep: autgrp.GroupOrderReport) -> int:
    if rep.brute_checked and rep.brute_order != rep.order:
        return EXIT_CHECK
    return EXIT_OK


def cmd_group(kind: str):
    def handler(args) -> int:
        rep = _group_report(kind, args)
        _emit_json(rep.as_dict())
        return _group_exit(rep)

    return handler


def _classify_rows(t: int, include_b: bool, cap: int):
    try:
        return classify(t, cap=cap, include_b=include_b)
    except SearchLimitError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _print_classification(rows, as_json: bool) -> None:
    dicts = [r.as_dict() for r in rows]
    if as_json:
        _emit_json({"t": rows[0].t, "classes": class_count(rows), "rows": dicts})
        return
    flat = [
        {
            "code": f"{r.family}{r.params}",
            "type": str(r.type),
            "n": r.signature.n,
            "size": r.signature.size,
            "rank": r.signature.rank,
            "kernel_dim": r.signature.kernel_dim,
            "class": r.class_id,
        }
        for r in rows
    ]
    print(_table(flat, list(flat[0])))
    print(f"{class_count(rows)} classes")


def cmd_classify(args) -> int:
    _print_classification(_classify_rows(args.t, args.include_b, args.cap), args.json)
    return EXIT_OK


def cmd_report(args) -> int:
    from . import plotting

    modes = [m for m in ("signature", "aut", "maut", "classify") if getattr(args, m) not in (None, False)]
    if len(modes) != 1:
        raise UsageError("report needs exactly one of --signature FILE, --aut, --maut, --classify")
    mode = modes[0]
    as_json = not args.table
    status = EXIT_OK
    if mode == "signature":
        code = _load_binary(args.signature)
        sig = signature(code)
        if as_json:
            _emit_json(sig.as_dict())
        else:
            print(_table([sig.as_dict()], ["n", "size", "rank", "kernel_dim"]))
        if args.figure:
            plotting.plot_distance_spectrum(code, args.figure, title=Path(args.signature).name)
    elif mode == "classify":
        if args.t is None:
            raise UsageError("report --classify needs --t")
        rows = _classify_rows(args.t, args.include_b, args.cap)
        _print_classification(rows, as_json)
        if args.figure:
            plotting.plot_classification(rows, args.figure)
    else:
        if mode == "maut" and args.family is None:
            raise UsageError("report --maut needs --family")
        rep = _group_report(mode, args)
        if as_json:
            _emit_json(rep.as_dict())
        else:
            print(_group_text(rep))
        status = _group_exit(rep)
        if args.figure:
            plotting.plot_order_factors(rep.factors, args.figure, title=f"{mode} {rep.family}{tuple(rep.params.values())}")
    if args.matrices_figure:
        if args.family is None:
            raise UsageError("--matrices-figure needs --family and parameters")
        fam, p, q = _family_params(args)
        gm = generator_matrices(p, q) if fam == "C" else b_generator_matrices(p, q)
        plotting.plot_matrices(gm, args.matrices_figure)
    return status


# ---------------------------------------------------------------------------
# equiv / verify
# ---------------------------------------------------------------------------


def cmd_equiv(args) -> int:
    if args.theorem1:
        g, d = args.theorem1
        if g < 0 or d < 0:
            raise UsageError("parameters must be non-negative")
        if g + 2 * d + 1 > MAX_T:
            raise UsageError(f"t={g + 2 * d + 1} exceeds the supported maximum {MAX_T}")
        print(theorem1_permutation(g, d))
        return EXIT_OK
    if not args.files or len(args.files) != 2:
        raise UsageError("equiv needs two code files or --theorem1 GAMMA DELTA_DOT")
    c1, c2 = (_load_binary(f) for f in args.files)
    try:
        perm = search_equivalence(c1, c2, n_max=args.n_max)
    except SearchLimitError as exc:
        raise UsageError(str(exc)) from exc
    if perm is None:
        print("not equivalent")
        return EXIT_CHECK
    print(perm)
    return EXIT_OK


def _family_list(text: str | None) -> list[str]:
    if not text:
        return []
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [n for n in names if n not in FAMILIES]
    if bad:
        raise UsageError(f"unknown check families {bad}; choose from {', '.join(FAMILIES)}")
    return names


def cmd_verify(args) -> int:
    only, skip = _family_list(args.only), _family_list(args.skip)
    families = [f for f in (only or FAMILIES) if f not in skip]
    try:
        plan = VerifyPlan.only(
            families,
            t_max=args.t_max,
            n_max=args.n_max,
            affine_samples=args.affine_samples,
            block_samples=args.block_samples,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run(plan, emit=lambda line: print(line, flush=True))
    print(report.text().splitlines()[-1])
    return EXIT_OK if report.ok else EXIT_CHECK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="z2z4had", description="Z2Z4-linear Hadamard codes: construction, invariants, equivalence, automorphisms.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="build a code and write it in the v1 text format")
    _add_family_args(sp)
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--matrices", action="store_true", help="append G, K and S sections")
    sp.add_argument("--binary", action="store_true", help="write the binary image instead of mixed words")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("invariants", help="signature (n, size, rank, kernel dim) of a code file as JSON")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("report", help="signature, group order or classification, optionally with a figure")
    sp.add_argument("--signature", metavar="FILE")
    sp.add_argument("--aut", action="store_true", help="permutation automorphism group of C(gamma_dot, delta)")
    sp.add_argument("--maut", action="store_true", help="monomial automorphism group (needs --family)")
    sp.add_argument("--classify", action="store_true")
    sp.add_argument("--t", type=int)
    sp.add_argument("--include-b", action="store_true")
    sp.add_argument("--cap", type=int, default=8, help="largest t accepted by --classify")
    sp.add_argument("--search-cap", type=int, default=2**24, help="largest monomial search space for --brute")
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--n-max", type=int, default=16)
    sp.add_argument("--json", action="store_true", help="JSON output (the default)")
    sp.add_argument("--table", action="store_true", help="aligned text table instead of JSON")
    sp.add_argument("--figure", metavar="PATH", help="write a figure for the report")
    sp.add_argument("--matrices-figure", metavar="PATH", help="draw G, K, S of the given family/parameters")
    _add_family_args(sp, required=False)
    sp.set_defaults(func=cmd_report, family=None)

    sp = sub.add_parser("classify", help="classes of the codes of length 2^t")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--include-b", action="store_true")
    sp.add_argument("--cap", type=int, default=8)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("equiv", help="explicit B -> C permutation, or search between two code files")
    sp.add_argument("files", nargs="*")
    sp.add_argument("--theorem1", nargs=2, type=int, metavar=("GAMMA", "DELTA_DOT"))
    sp.add_argument("--n-max", type=int, default=16)
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("aut", help="order of the permutation automorphism group of C(gamma_dot, delta)")
    sp.add_argument("--gamma-dot", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--n-max", type=int, default=16)
    sp.set_defaults(func=cmd_group("aut"))

    sp = sub.add_parser("maut", help="order of the monomial automorphism group")
    _add_family_args(sp)
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--cap", dest="search_cap", type=int, default=2**24, help="largest search space for --brute")
    sp.set_defaults(func=cmd_group("maut"))

    sp = sub.add_parser("verify", help="run the self-check suite")
    sp.add_argument("--t-max", type=int, default=6)
    sp.add_argument("--only", help=f"comma-separated families from: {', '.join(FAMILIES)}")
    sp.add_argument("--skip", help="comma-separated families to leave out")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n-max", type=int, default=16)
    sp.add_argument("--affine-samples", type=int, default=10_000)
    sp.add_argument("--block-samples", type=int, default=100)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except fileio.FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
