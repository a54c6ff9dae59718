"""Command-line front end: ``mibialg check <family> ...``.

Exit status is 0 when every asserted record passes, 1 when any fails and 2
on input errors.  Report-only suites (``bibal-sym``, ``bibalanced``) are
printed with status ``holds``/``violated`` and never affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Callable

from . import checks, cyclic, lie
from .checks import CheckReport, sampler
from .poset import PosetAlgebra, parse_poset
from .quiver import PathAlgebra, parse_quiver


class InputError(Exception):
    pass


def _carrier_suites(c) -> dict[str, Callable]:
    w = c.basis_window()
    return {
        "assoc": lambda s: checks.check_associativity(c, w, s),
        "coassoc": lambda s: checks.check_coassociativity(c, w, s),
        "deriv": lambda s: checks.check_derivation(c, w, s),
        "compat": lambda s: checks.check_multiplier_compat(c, w, s),
        "nondegen": lambda s: checks.check_nondegeneracy(c, w, s),
        "lie-jacobi": lambda s: lie.check_commutator_jacobi(c, w, s),
        "prop-identity": lambda s: lie.check_prop_identity(c, w, s),
        "antisym": lambda s: lie.check_antisymmetry(lie.derivator_from_carrier(c), w, s),
        "cojacobi": lambda s: lie.check_generalized_cojacobi(lie.derivator_from_carrier(c), w, s),
        "bibal-sym": lambda s: lie.check_bibalanceator_symmetric(c, w, s),
        "bibalanced": lambda s: lie.check_bibalanced(c, w, s),
    }


def quiver_suites(text: str, max_len: int) -> dict[str, Callable]:
    return _carrier_suites(PathAlgebra(parse_quiver(text), max_len))


def poset_suites(text: str, max_size: int | None) -> dict[str, Callable]:
    return _carrier_suites(PosetAlgebra(parse_poset(text), max_size))


def cyclic_suites(window: int) -> dict[str, Callable]:
    suites = _carrier_suites(cyclic.GroupAlgebra(window))
    suites.update(
        {
            "closed-form": lambda s: cyclic.check_closed_vs_recursive(window, s),
            "star-assoc": lambda s: cyclic.check_star_associativity(window, s),
            "star-rule": lambda s: cyclic.check_star_rule(window, s),
            "gen-deriv": lambda s: cyclic.check_generalized_derivation(window, s),
            "duality": lambda s: cyclic.check_duality_pairing(window, s),
        }
    )
    return suites


LIE_EXAMPLES = ("sl2", "dim1", "dim2:iotaX", "dim2:zero", "functional")


def _sampled(items, sample):
    items = list(items)
    return sample(items) if sample is not None else items


def lie_suites(example: str) -> dict[str, Callable]:
    if example in ("sl2", "functional"):
        g, beta = lie.sl2_coboundary()
    elif example == "dim1":
        g, beta = lie.dim1(), lambda x: lie.ZERO
    elif example.startswith("dim2:"):
        g, beta = lie.dim2(), lie.dim2_beta
    else:
        raise InputError(f"unknown example {example!r}; choose from {', '.join(LIE_EXAMPLES)}")

    def lb(suite):
        return lambda s: _sampled((r for r in lie.check_lie_bialgebra(g, beta) if r.suite == suite), s)

    suites = {name: lb(name) for name in ("lb-antisym", "lb-cocycle", "lb-cojacobi")}
    if example in ("sl2", "dim1"):
        return suites
    if example == "functional":
        data = lie.build_functional_example(g, beta, {"h": 1})
    else:
        data = lie.build_dim2_example(example.split(":", 1)[1])
    suites.update(
        {
            "antisym": lambda s: lie.check_antisymmetry(data, None, s),
            "der-values": lambda s: lie.check_derivation_values(data, None, s),
            "cojacobi": lambda s: lie.check_generalized_cojacobi(data, None, s),
            "cojacobi-zero": lambda s: lie.check_cojacobi_vanishing(data, None, s),
        }
    )
    return suites


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mibialg", description="Check multiplier epsilon-bialgebra axioms.")
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", help="run checker suites on a family")
    fam = check.add_subparsers(dest="family", required=True)

    def common(p):
        p.add_argument("--suites", default="all", help="comma-separated suite names, or 'all'")
        p.add_argument("--format", choices=("text", "json-lines"), default="text")
        p.add_argument("--sample", type=int, default=None, metavar="K", help="keep K witnesses per suite")
        p.add_argument("--seed", type=int, default=None, metavar="S")

    p = fam.add_parser("quiver", help="path algebra of a quiver file")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=3)
    common(p)
    p = fam.add_parser("poset", help="bounded subposets of a poset file")
    p.add_argument("file")
    p.add_argument("--max-size", type=int, default=None)
    common(p)
    p = fam.add_parser("cyclic", help="group algebra of the infinite cyclic group and its dual")
    p.add_argument("--window", type=int, default=4)
    common(p)
    p = fam.add_parser("lie", help="finite-dimensional Lie bialgebra examples")
    p.add_argument("--example", required=True, choices=LIE_EXAMPLES)
    common(p)
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def resolve_suites(args) -> dict[str, Callable]:
    try:
        if args.family == "quiver":
            if args.max_len < 0:
                raise InputError("--max-len must be nonnegative")
            suites = quiver_suites(_read(args.file), args.max_len)
        elif args.family == "poset":
            if args.max_size is not None and args.max_size < 1:
                raise InputError("--max-size must be at least 1")
            suites = poset_suites(_read(args.file), args.max_size)
        elif args.family == "cyclic":
            if args.window < 0:
                raise InputError("--window must be nonnegative")
            suites = cyclic_suites(args.window)
        else:
            suites = lie_suites(args.example)
    except ValueError as exc:
        raise InputError(f"{getattr(args, 'file', args.family)}: {exc}") from exc
    if args.suites == "all":
        return suites
    chosen = [s.strip() for s in args.suites.split(",") if s.strip()]
    unknown = [s for s in chosen if s not in suites]
    if unknown or not chosen:
        raise InputError(
            f"unknown suite(s) {', '.join(unknown) or '(none given)'}; available: {', '.join(sorted(suites))}"
        )
    return {s: suites[s] for s in dict.fromkeys(chosen)}


def collect(suites: dict[str, Callable], sample) -> list[CheckReport]:
    records: list[CheckReport] = []
    for name in suites:
        records.extend(suites[name](sample))
    records.sort(key=CheckReport.sort_key)
    return records


def record_json(r: CheckReport) -> str:
    obj = {"suite": r.suite, "family": r.family, "witness": r.rendered_witness(), "status": r.status}
    if not r.passed:
        obj["lhs"] = r.rendered_side(r.lhs)
        obj["rhs"] = r.rendered_side(r.rhs)
    return json.dumps(obj, ensure_ascii=False)


def render_text(records: list[CheckReport]) -> str:
    lines = []
    counts: dict = {}
    for r in records:
        counts.setdefault((r.suite, r.family), Counter())[r.status] += 1
    lines.append(f"{'suite':<16} {'family':<18} {'checks':>7} {'pass':>7} {'fail':>7}")
    for (suite, family), cnt in sorted(counts.items()):
        good = cnt["pass"] + cnt["holds"]
        bad = cnt["fail"] + cnt["violated"]
        note = "  (report only)" if cnt["holds"] or cnt["violated"] else ""
        lines.append(f"{suite:<16} {family:<18} {good + bad:>7} {good:>7} {bad:>7}{note}")
    failed = sum(1 for r in records if not r.passed and not r.report_only)
    lines.append(f"{len(records)} checks, {failed} failed")
    for r in records:
        if r.passed or r.report_only:
            continue
        lines.append(f"FAIL {r.suite} {r.family} [{', '.join(r.rendered_witness())}]")
        lines.append(f"  lhs = {r.rendered_side(r.lhs)}")
        lines.append(f"  rhs = {r.rendered_side(r.rhs)}")
    return "\n".join(lines) + "\n"


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.seed is not None and args.sample is None:
            raise InputError("--seed requires --sample")
        if args.sample is not None and args.sample < 0:
            raise InputError("--sample must be nonnegative")
        suites = resolve_suites(args)
    except InputError as exc:
        print(f"mibialg: error: {exc}", file=err)
        return 2
    records = collect(suites, sampler(args.sample, args.seed or 0))
    if args.format == "json-lines":
        out.write("".join(record_json(r) + "\n" for r in records))
    else:
        out.write(render_text(records))
    return 0 if checks.all_passed(records) else 1


def entry() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe (for example ``| head``)
        sys.stderr.close()
        code = 1
    sys.exit(code)
