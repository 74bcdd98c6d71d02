"""Command-line interface.

Exit codes: 0 success, 1 a check or requested structure failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import io
from .boolean import enumerate_boolean_congruences, lemma2_kernel_exclusion
from .checks import SUITES, run_checks
from .congruence import (
    CongruenceError,
    ConFamily,
    all_filters,
    con_poset,
    enumerate_congruences,
    enumerate_congruences_bruteforce,
    format_relation,
    is_strong_filter,
    kernel,
    parse_relation,
    quotient_poset,
)
from .heyting import (
    all_subsets_with_top,
    enumerate_star_congruences,
    is_deductive_system,
    missing_star_pair,
)
from .poset import PosetError, lower_cone, max_l, min_u, upper_cone


class UsageError(Exception):
    """Bad input from the command line; reported with exit code 2."""


class Failure(Exception):
    """A requested structure does not exist; reported with exit code 1."""


def _load(args) -> io.PosetDocument:
    try:
        doc = io.load(args.file)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None
    if getattr(args, "expect_star", False) and doc.star is None:
        x, y = missing_star_pair(doc.poset) or (0, 0)
        P = doc.poset
        raise UsageError(
            f"{doc.name}: --expect-star given but {P.labels[x]}*{P.labels[y]} does not exist"
        )
    return doc


def _family(doc: io.PosetDocument, args) -> ConFamily:
    P = doc.poset
    if getattr(args, "bruteforce", False):
        try:
            family = enumerate_congruences_bruteforce(P)
        except CongruenceError as exc:
            raise UsageError(str(exc)) from None
    else:
        family = enumerate_congruences(P)
    if getattr(args, "star", False):
        if doc.star is None:
            raise Failure(f"{doc.name} is not relatively pseudocomplemented")
        family = enumerate_star_congruences(P, doc.star, family)
    if getattr(args, "comp", False):
        if doc.comp is None:
            raise Failure(f"{doc.name} has no complementation")
        family = enumerate_boolean_congruences(P, doc.comp, family)
    return family


def cmd_validate(args) -> int:
    doc = _load(args)
    P = doc.poset
    top = P.labels[P.top] if P.top is not None else "-"
    bottom = P.labels[P.bottom] if P.bottom is not None else "-"
    print(f"{doc.name}: {P.n} elements, {len(P.covers)} covers, bottom {bottom}, top {top}")
    print(f"relatively pseudocomplemented: {'yes' if doc.star is not None else 'no'}")
    print(f"complemented: {'yes' if doc.comp is not None else 'no'}")
    return 0


def cmd_cones(args) -> int:
    doc = _load(args)
    P = doc.poset
    try:
        A = P.elements(*args.elements)
    except PosetError as exc:
        raise UsageError(str(exc)) from None
    for name, fn in (("L", lower_cone), ("U", upper_cone), ("Max L", max_l), ("Min U", min_u)):
        print(f"{name}: {' '.join(P.names(fn(P, A)))}")
    return 0


def cmd_star_table(args) -> int:
    doc = _load(args)
    if doc.star is None:
        x, y = missing_star_pair(doc.poset)
        P = doc.poset
        raise Failure(f"{doc.name}: no relative pseudocomplement for ({P.labels[x]},{P.labels[y]})")
    sys.stdout.write(doc.star.format())
    return 0


def cmd_congruences(args) -> int:
    doc = _load(args)
    for line in _family(doc, args).lines():
        print(line)
    return 0


def cmd_con_lattice(args) -> int:
    doc = _load(args)
    family = con_poset(_family(doc, args))
    if args.dot:
        sys.stdout.write(io.emit_con_dot(family))
        return 0
    for line in family.lines():
        print(line)
    Q = family.as_poset()
    print("covers: " + " ".join(f"{Q.labels[i]}<{Q.labels[j]}" for i, j in Q.covers))
    print(f"lattice: {'yes' if family.is_lattice() else 'no'}")
    return 0


def cmd_quotient(args) -> int:
    doc = _load(args)
    P = doc.poset
    family = enumerate_congruences(P)
    if args.congruence in family.names:
        theta = family.members[family.names.index(args.congruence)]
    else:
        try:
            theta = parse_relation(P, args.congruence)
        except CongruenceError as exc:
            raise UsageError(str(exc)) from None
    if theta not in family:
        raise Failure(f"{format_relation(P, theta)} is not a congruence of {doc.name}")
    q = quotient_poset(P, theta)
    sys.stdout.write(io.format_poset(q.poset, f"{doc.name}/{format_relation(P, theta)}"))
    print("least: " + " ".join(P.labels[x] for x in q.least))
    return 0


def cmd_filters(args) -> int:
    doc = _load(args)
    P = doc.poset
    if args.deductive:
        if doc.star is None or P.top is None:
            raise Failure(f"{doc.name} is not relatively pseudocomplemented")
        found = [D for D in all_subsets_with_top(P) if is_deductive_system(P, doc.star, D)]
        found.sort(key=lambda D: D.mask)
    else:
        found = all_filters(P)
    if args.strong:
        found = [F for F in found if is_strong_filter(P, F)]
    for F in found:
        print("{" + ",".join(P.names(F)) + "}")
    return 0


def cmd_kernels(args) -> int:
    doc = _load(args)
    P = doc.poset
    if P.top is None:
        raise Failure(f"{doc.name} has no top element")
    family = enumerate_congruences(P)
    for nm, t in zip(family.names, family.members):
        print(f"{nm}: kernel {{{','.join(P.names(kernel(P, t)))}}}")
    kernels = {kernel(P, t).mask for t in family}
    for a in range(P.n):
        status = "kernel" if P.up[a] in kernels else "not a kernel"
        ex = lemma2_kernel_exclusion(P, a, doc.comp)
        extra = ""
        if ex.criterion_i:
            extra += f"; criterion i b={','.join(P.labels[b] for b in ex.criterion_i)}"
        if ex.criterion_ii:
            extra += f"; criterion ii b={','.join(P.labels[b] for b in ex.criterion_ii)}"
        print(f"[{P.labels[a]},{P.labels[P.top]}]: {status}{extra}")
    return 0


def cmd_check(args) -> int:
    doc = _load(args)
    report = run_checks(doc.poset, args.suite, seed=args.seed)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def cmd_examples(args) -> int:
    for name in io.bundled_names():
        P = io.load_bundled(name).poset
        print(f"{name}: {P.n} elements")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetcong", description="Congruences of finite posets."
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        if name != "examples":
            p.add_argument("file", help="poset file, or the name of a bundled poset")
            p.add_argument(
                "--expect-star", action="store_true",
                help="fail unless the poset is relatively pseudocomplemented",
            )
        return p

    add("validate", cmd_validate, "parse and validate a poset")
    add("cones", cmd_cones, "cones of a set of elements").add_argument("elements", nargs="*")
    add("star-table", cmd_star_table, "relative pseudocomplement table")
    for name, fn, help in (
        ("congruences", cmd_congruences, "list congruences"),
        ("con-lattice", cmd_con_lattice, "congruences ordered by inclusion"),
    ):
        p = add(name, fn, help)
        p.add_argument("--star", action="store_true", help="only those compatible with *")
        p.add_argument("--comp", action="store_true", help="only those compatible with '")
        p.add_argument("--bruteforce", action="store_true", help="search all set partitions")
        if name == "con-lattice":
            p.add_argument("--dot", action="store_true", help="emit a DOT graph")
    add("quotient", cmd_quotient, "quotient by a congruence").add_argument(
        "congruence", help="class list such as '[0,a][b,1]' or a name from `congruences`"
    )
    p = add("filters", cmd_filters, "list filters")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--deductive", action="store_true", help="deductive systems instead")
    add("kernels", cmd_kernels, "congruence kernels and principal filters")
    p = add("check", cmd_check, "run the theorem checks")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled relations")
    add("examples", cmd_examples, "list bundled posets")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, io.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
