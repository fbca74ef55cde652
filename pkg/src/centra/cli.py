"""Command-line frontend: ``centra {analyze,generate,verify,construct}``.

Exit codes: 0 clean, 1 counterexample found, 2 malformed input,
3 generation failure, 4 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import catalog, properties, regular, representation, isotopy
from .core import (
    CayleyTable,
    Permutation,
    TopismTriple,
    format_table,
    left_translation,
    parse_permutation_file,
    parse_table,
    right_translation,
)
from .errors import (
    ClosureOverflow,
    InternalInconsistency,
    LawViolation,
    MalformedInput,
    NotALoop,
    NotSharplyTransitive,
    OrderMismatch,
)

EXIT_OK, EXIT_FOUND, EXIT_MALFORMED, EXIT_GENERATION, EXIT_USAGE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


# -- analyze ----------------------------------------------------------------

def full_report(t: CayleyTable) -> properties.PropertyReport:
    report = properties.analyze(t)
    preds = report.predicates
    lam, rho = regular.lambda_regular_set(t), regular.rho_regular_set(t)
    mu = regular.mu_regular_set(t)
    preds["squares_lambda_regular"] = properties.Check(regular.lc_autotopism_side(t))
    preds["squares_rho_regular"] = properties.Check(regular.rc_autotopism_side(t))
    preds["squares_mu_regular"] = properties.Check(regular.c_mu_side(t))
    for side in representation.SIDES:
        pi = representation.representation(t, side)
        preds[f"{side}_rep_closed_ab2"] = properties.Check(representation.closed_under_ab2(pi))
        preds[f"{side}_rep_closed_a2b"] = properties.Check(representation.closed_under_a2b(pi))
    report.computed_sets["regular_set_sizes"] = {
        "lambda": len(lam), "rho": len(rho), "mu": len(mu),
    }
    return report


def cmd_analyze(args) -> int:
    t = parse_table(_read(args.input))
    if not t.is_loop:
        raise NotALoop("input table is not a loop")
    report = full_report(t)
    _write(None, report.dumps() + "\n" if args.format == "json" else report.render_text())
    return EXIT_OK


# -- generate ---------------------------------------------------------------

def cmd_generate(args) -> int:
    n, gens = parse_permutation_file(_read(args.input))
    t = representation.generate_from_generators(gens, n, args.law, args.side, args.identity)
    _write(args.output, format_table(t))
    if args.report:
        _write(args.report, properties.analyze(t).dumps() + "\n")
    return EXIT_OK


# -- construct --------------------------------------------------------------

def cmd_construct(args) -> int:
    try:
        t = catalog.by_name(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, format_table(t))
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def _range(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def build_corpus(specs, seed, input_path=None) -> list:
    """Resolve corpus items to ``[(label, table), ...]`` in the order given.

    Items: ``all:N`` or ``all:A-B`` (every normalized loop of those orders),
    ``random:ORDERS:COUNT`` (``COUNT`` seeded random loops per order),
    ``catalog`` (every catalog group plus ``c12`` and ``o16``), or any
    fixture name accepted by ``construct``.
    """
    corpus = []
    if input_path:
        corpus.append((input_path, parse_table(_read(input_path))))
    for spec in specs or []:
        if spec.startswith("all:"):
            for n in _range(spec[4:]):
                corpus += [(f"all:{n}#{k}", t) for k, t in enumerate(catalog.all_loops(n))]
        elif spec.startswith("random:"):
            m = re.fullmatch(r"random:(\d+(?:-\d+)?):(\d+)", spec)
            if not m:
                raise UsageError(f"bad random corpus item {spec!r}")
            for n in _range(m.group(1)):
                loops = catalog.random_loops(n, int(m.group(2)), seed + n)
                corpus += [(f"random:{n}#{k}", t) for k, t in enumerate(loops)]
        elif spec == "catalog":
            corpus += list(catalog.catalog_groups().items())
            corpus += [("c12", catalog.c_loop_12()), ("O16", catalog.cayley_loop())]
        else:
            try:
                corpus.append((spec, catalog.by_name(spec)))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    if not corpus:
        raise UsageError("verify needs --input or at least one --corpus item")
    return corpus


def _auto_enum_check(t, max_order):
    if t.order > max_order:
        return True
    group = regular.enumerate_autotopisms(t, max_order=max_order)
    if t.order <= 4 and set(group.triples) != regular.autotopisms_brute(t):
        return False
    ident = Permutation.identity(t.order)
    lc_in = all(
        TopismTriple(left_translation(t, x) ** 2, ident, left_translation(t, x) ** 2) in group
        for x in range(t.order)
    )
    rc_in = all(
        TopismTriple(ident, right_translation(t, x) ** 2, right_translation(t, x) ** 2) in group
        for x in range(t.order)
    )
    return lc_in == properties.is_lc(t).holds and rc_in == properties.is_rc(t).holds


PER_LOOP_CHECKS = {
    "lc-auto": lambda t, a: regular.check_theorem_lc_auto(t),
    "rc-auto": lambda t, a: regular.check_theorem_rc_auto(t),
    "c-mu": lambda t, a: regular.check_theorem_c_mu(t),
    "lambda-rho": lambda t, a: regular.check_lemma_lambda_rho(t),
    "closure-lcrc": lambda t, a: all(representation.check_closure_lcrc(t, s) for s in representation.SIDES),
    "closure-c": lambda t, a: all(representation.check_closure_c(t, s) for s in representation.SIDES),
    "power": lambda t, a: all(
        r.holds or r.vacuous
        for r in (representation.check_power_closure(t, s) for s in representation.SIDES)
    ),
    "auto-enum": lambda t, a: _auto_enum_check(t, a.max_order),
}

ISO_CHECKS = {
    "iso-lcrc": isotopy.verify_iso_invariance_lcrc,
    "iso-c": isotopy.verify_iso_c,
    "iso-cc": isotopy.verify_iso_cc,
}

THEOREMS = sorted(list(PER_LOOP_CHECKS) + list(ISO_CHECKS) + ["corollary"])


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    doc = {"theorem": theorem, "seed": args.seed}
    findings, inconsistencies = [], []
    if theorem == "corollary":
        reports = isotopy.verify_corollary_fixtures(args.shape, args.budget, args.seed)
        doc["reports"] = [r.to_json() for r in reports]
        findings = [c for r in reports for c in r.counterexamples]
    else:
        corpus = build_corpus(args.corpus, args.seed, args.input)
        doc["corpus"] = list(args.corpus or []) + ([args.input] if args.input else [])
        doc["items"] = len(corpus)
        if theorem in ISO_CHECKS:
            reports = []
            for label, t in corpus:
                rep = ISO_CHECKS[theorem](t, args.shape, args.budget, args.seed)
                rep.label = label
                reports.append(rep)
            doc["reports"] = [r.to_json() for r in reports]
            findings = [c for r in reports for c in r.counterexamples]
        else:
            check = PER_LOOP_CHECKS[theorem]
            for index, (label, t) in enumerate(corpus):
                if not t.is_loop:
                    raise NotALoop(f"corpus item {label} is not a loop")
                try:
                    agree = check(t, args)
                except InternalInconsistency as exc:
                    inconsistencies.append({"index": index, "label": label, "digest": t.digest, "error": str(exc)})
                    continue
                if not agree:
                    findings.append({"index": index, "label": label, "digest": t.digest})
    doc["counterexamples"] = findings
    doc["internal_inconsistencies"] = inconsistencies
    sys.stdout.write(_dump(doc))
    return EXIT_FOUND if findings or inconsistencies else EXIT_OK


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="centra", description="Finite central-loop toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="predicate battery for one loop table")
    a.add_argument("--input", "-i", default="-")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="rebuild a loop from generating translations")
    g.add_argument("--input", "-i", default="-", help="permutation file")
    g.add_argument("--law", choices=representation.LAWS, default="c")
    g.add_argument("--side", choices=representation.SIDES, default="right")
    g.add_argument("--identity", type=int, default=0)
    g.add_argument("--output", "-o", default="-")
    g.add_argument("--report", help="write the property report (JSON) here")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a theorem over a corpus")
    v.add_argument("--theorem", required=True)
    v.add_argument("--corpus", action="append", help="corpus item (repeatable)")
    v.add_argument("--input", "-i", help="single table file to add to the corpus")
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--budget", type=int, default=10_000)
    v.add_argument("--shape", choices=isotopy.SHAPES, default="ABB")
    v.add_argument("--max-order", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="emit a catalog table")
    c.add_argument("--name", required=True)
    c.add_argument("--output", "-o", default="-")
    c.set_defaults(func=cmd_construct)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_order", None) is None and args.command == "verify":
        args.max_order = regular.autotopism_cap()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"centra: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MalformedInput, NotALoop) as exc:
        print(f"centra: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (ClosureOverflow, NotSharplyTransitive, LawViolation, OrderMismatch) as exc:
        print(f"centra: generation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except FileNotFoundError as exc:
        print(f"centra: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
