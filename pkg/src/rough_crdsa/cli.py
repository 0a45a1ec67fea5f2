"""Command-line front end.

    rough-crdsa table FILE [--distinct] [--tsv]
    rough-crdsa check FILE
    rough-crdsa iso FILE
    rough-crdsa selftest

Exit codes: 0 success (CRDSA), 1 usage or parse error, 2 checked property fails.
"""
from __future__ import annotations

import argparse
import sys
from typing import Iterable

from .algebra import (TooLargeError, atoms, check_all, crdsa_isomorphic_by_center, center,
                      is_isomorphic_bruteforce)
from .chain import build_c3_power, render_vector
from .morphisms import (alpha, alpha_map, class_collapse, collapse_vector, embed_prsa_into_c3u,
                        is_embedding, is_isomorphism, phi, phi_map)
from .space import (ApproximationSpace, SpaceParseError, build_prsa, carrier_size,
                    core_witness, crisp_sets, enumerate_carrier, is_crdsa_space, parse_space,
                    rough_pair)
from .ternary import TernaryPartition

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

MAX_FULL_UNIVERSE = 20
MAX_DISTINCT_ROWS = 10 ** 6
#: carriers up to this size get the exhaustive law check in ``check``
EXHAUSTIVE_BOUND = 243
#: ``iso`` works on explicit tables up to this size
ISO_BOUND = 243
BRUTE_FORCE_BOUND = 81

TABLE_HEADER = ("X", "lower", "upper", "upper^c", "TP_U", "C3^U", "C3^E")


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def label(u) -> str:
    if isinstance(u, tuple):
        return "(" + ",".join(map(str, u)) + ")"
    return str(u)


def render_subset(S: ApproximationSpace, X: Iterable) -> str:
    X = frozenset(X)
    if not X:
        return "∅"
    if len(X) == len(S.universe):
        return "U"
    return "{" + ",".join(label(u) for u in S.ordered(X)) + "}"


def render_pair(S: ApproximationSpace, first, second) -> str:
    return f"({render_subset(S, first)},{render_subset(S, second)})"


def render_tp(S: ApproximationSpace, t: TernaryPartition) -> str:
    return render_pair(S, t.ones, t.zeros)


def table_rows(S: ApproximationSpace, distinct: bool = False) -> list[tuple[str, ...]]:
    """Rows of the rough set table, columns as in ``TABLE_HEADER``.

    Full mode lists every subset X in binary counting order (the first
    universe element is the lowest bit).  Distinct mode lists each rough pair
    once in canonical carrier order, with X the lower approximation plus the
    first element of every boundary block.
    """
    if distinct:
        if carrier_size(S) > MAX_DISTINCT_ROWS:
            raise CliError(f"refusing: {carrier_size(S)} distinct rough pairs exceed {MAX_DISTINCT_ROWS}")
        subsets = []
        for p in enumerate_carrier(S):
            X = set(p.lower)
            X.update(b[0] for b in S.blocks if not set(b) <= p.lower and set(b) <= p.upper)
            subsets.append(frozenset(X))
    else:
        if len(S.universe) > MAX_FULL_UNIVERSE:
            raise CliError(f"refusing: 2^{len(S.universe)} subsets; universe limit is "
                           f"{MAX_FULL_UNIVERSE} (try --distinct)")
        subsets = (S.members(m) for m in range(1 << len(S.universe)))
    U = frozenset(S.universe)
    rows = []
    for X in subsets:
        p = rough_pair(S, X)
        tp = phi(p, S)
        rows.append((
            render_subset(S, X),
            render_subset(S, p.lower),
            render_subset(S, p.upper),
            render_subset(S, U - p.upper),
            render_tp(S, tp),
            render_vector(alpha(tp, S.universe)),
            render_vector(collapse_vector(S, p)),
        ))
    return rows


def format_table(rows, header=TABLE_HEADER, tsv: bool = False) -> str:
    rows = [tuple(header)] + [tuple(r) for r in rows]
    if tsv:
        return "".join("\t".join(r) + "\n" for r in rows)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def cmd_table(S: ApproximationSpace, distinct: bool = False, tsv: bool = False) -> tuple[str, int]:
    return format_table(table_rows(S, distinct), tsv=tsv), EXIT_OK


def _verdict(report) -> str:
    if report.holds:
        return "verified"
    return f"FAILED ({report.detail or report.law_name} at {report.counterexample!r})"


def cmd_check(S: ApproximationSpace) -> tuple[str, int]:
    out = []
    sizes = S.block_sizes()
    out.append(f"universe: {len(S.universe)} elements")
    out.append(f"blocks: {len(S.blocks)} (sizes {','.join(map(str, sizes))})")
    for e, b in enumerate(S.blocks):
        out.append(f"  block {e}: {{{','.join(map(label, b))}}}")
    singles = [b[0] for b in S.blocks if len(b) == 1]
    out.append("singleton blocks: " + (", ".join(label(u) for u in singles) if singles else "none"))

    crdsa = is_crdsa_space(S)
    out.append(f"CRDSA: {'yes' if crdsa else 'no'}")
    w = core_witness(S)
    if w is None:
        out.append("core witness: none")
    else:
        p = rough_pair(S, w)
        out.append(f"core witness: {render_subset(S, w)} -> {render_pair(S, p.lower, p.upper)}")

    size = carrier_size(S)
    out.append(f"|R_θ|: {size}")
    code = EXIT_OK if crdsa else EXIT_FAILED
    if size <= EXHAUSTIVE_BOUND:
        R = build_prsa(S)
        C = center(R)
        out.append(f"|center|: {len(C)}")
        out.append(f"atoms: {len(atoms(R))}")
        failed = [r for r in check_all(R) if not r.holds]
        crisp_ok = set(C) == set(crisp_sets(S))
        if crdsa:
            if failed or not crisp_ok:
                out.append("verification: FAILED " + "; ".join(r.law_name for r in failed))
                code = EXIT_FAILED
            else:
                out.append("verification: exhaustive, all CRDSA laws hold; center = crisp sets")
        else:
            names = ", ".join(r.law_name for r in failed) or "none"
            out.append(f"verification: exhaustive; laws failing: {names}")
    else:
        out.append(f"|center|: {2 ** len(S.blocks)}")
        out.append(f"atoms: {len(S.blocks)}")
        out.append(f"verification: block criterion only (|R_θ| > {EXHAUSTIVE_BOUND})")
    return "\n".join(out) + "\n", code


def cmd_iso(S: ApproximationSpace) -> tuple[str, int]:
    size = carrier_size(S)
    if size > ISO_BOUND:
        raise CliError(f"refusing: |R_θ| = {size} exceeds {ISO_BOUND}")
    R = build_prsa(S)
    crdsa = is_crdsa_space(S)
    k = len(S.blocks)
    out = [f"space: {len(S.universe)} elements, {k} blocks, |R_θ| = {len(R)}"]
    reports = []
    if crdsa:
        out.append("CRDSA: yes")
        reports.append(("R_θ -> C3^E (class collapse) isomorphism", is_isomorphism(class_collapse(S, R))))
        reports.append(("TP_E -> C3^E (α) isomorphism", is_isomorphism(alpha_map(range(k)))))
        reports.append(("R_θ -> TP_U (φ) embedding", is_embedding(phi_map(S, R))))
        reports.append(("R_θ -> C3^U (φ∘α) embedding", is_embedding(embed_prsa_into_c3u(S, R))))
        C3E = build_c3_power(k)
        same = crdsa_isomorphic_by_center(R, C3E)
        line = f"R_θ ≅ C3^E by center cardinality ({len(center(R))} = {len(center(C3E))})"
        out_center = (line, same)
        if len(R) <= BRUTE_FORCE_BOUND:
            found = is_isomorphic_bruteforce(R, C3E) is not None
        else:
            found = None
    else:
        out.append("CRDSA: no")
        out.append("not a CRDSA; embedding checks limited to lattice+constants")
        lattice = dict(ops=("meet", "join"), check_core=False)
        reports.append(("R_θ -> C3^E (class collapse) embedding",
                        is_embedding(class_collapse(S, R, strict=False), **lattice)))
        reports.append(("R_θ -> TP_U (φ) embedding", is_embedding(phi_map(S, R), **lattice)))
        reports.append(("R_θ -> C3^U (φ∘α) embedding",
                        is_embedding(embed_prsa_into_c3u(S, R, strict=False), **lattice)))
        out_center, found = None, None

    ok = True
    for name, rep in reports:
        out.append(f"{name}: {_verdict(rep)}")
        ok &= rep.holds
    if out_center is not None:
        line, same = out_center
        out.append(f"{line}: {'verified' if same else 'FAILED'}")
        ok &= same
    if found is not None:
        out.append(f"brute-force R_θ ≅ C3^E: {'verified' if found else 'FAILED'}")
        ok &= found
    elif crdsa:
        out.append(f"brute-force R_θ ≅ C3^E: skipped (|R_θ| > {BRUTE_FORCE_BOUND})")

    out.append("")
    rows = []
    for p in R.carrier:
        tp = phi(p, S)
        rows.append((render_pair(S, p.lower, p.upper), render_tp(S, tp),
                     render_vector(alpha(tp, S.universe)), render_vector(collapse_vector(S, p))))
    out.append(format_table(rows, header=("R_θ", "TP_U", "C3^U", "C3^E")).rstrip("\n"))
    code = EXIT_OK if ok and crdsa else EXIT_FAILED
    return "\n".join(out) + "\n", code


def cmd_selftest() -> tuple[str, int]:
    from .acceptance import run_all

    results = run_all()
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines) + "\n", EXIT_OK if passed == len(results) else EXIT_FAILED


def _load(path: str) -> ApproximationSpace:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None
    try:
        return parse_space(text)
    except SpaceParseError as exc:
        raise CliError(f"{path}:{exc.line}:{exc.column}: error: {exc.message}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rough-crdsa",
        description="Rough set algebras of finite approximation spaces as CRDSAs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="rough set table: approximations, TP_U, C3^U and C3^E images")
    p.add_argument("file", help="space file ('-' for stdin)")
    p.add_argument("--distinct", action="store_true", help="one row per distinct rough pair")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")

    p = sub.add_parser("check", help="block census, CRDSA verdict, core witness, center and atoms")
    p.add_argument("file")

    p = sub.add_parser("iso", help="verify R_θ ≅ C3^E ≅ TP_E and the embedding into C3^U")
    p.add_argument("file")

    sub.add_parser("selftest", help="run the acceptance criteria")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "selftest":
            text, code = cmd_selftest()
        else:
            S = _load(args.file)
            if args.command == "table":
                text, code = cmd_table(S, args.distinct, args.tsv)
            elif args.command == "check":
                text, code = cmd_check(S)
            else:
                text, code = cmd_iso(S)
    except CliError as exc:
        print(f"rough-crdsa: {exc}", file=sys.stderr)
        return exc.code
    except TooLargeError as exc:
        print(f"rough-crdsa: refusing: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
