"""Batch command-line surface.

Machine-readable output (TSV with a header row, key-value report lines)
goes to stdout; human summaries go to stderr.  Exit codes: 0 success, 1
validation failure, 2 usage error.  Identical inputs and flags produce
byte-identical output; nothing here computes anything the library does not
already expose.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from .core import LatticeError, classify, enumerate_lattices
from .ortho import attach_ortho, classify_negation, ortho_class, relations, relations_of
from .primorial import (
    boolean_carrier,
    chain_dposet_members,
    dposet_check,
    generate_primorial,
    reduce_boolean,
)
from .probability import (
    DEFINITIONS,
    probability_report,
    random_boolean_assignment,
    validate_probability,
)
from .projection import METHODS, project
from .seqproc import PRESETS, analyze, gsp_preset, load_fasta, pyramid_rows, summarize
from .textio import (
    FormatError,
    format_carrier,
    format_mask,
    load_lattice_file,
    parse_mask,
    to_dot,
)


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return " ".join(str(v) for v in value)
    return str(value)


def _emit(out, key, value):
    print(f"{key}: {_fmt(value)}", file=out)


def _load_built(path):
    doc = load_lattice_file(path)
    built = doc.build()
    return doc, built


def _require_lattice(built):
    if not built.is_lattice:
        raise LatticeError("input is not a lattice (some pair has no join or meet)")
    return built


def cmd_classify(args, out):
    doc, built = _load_built(args.file)
    _emit(out, "lattice", doc.name or args.file)
    _emit(out, "elements", built.n)
    _emit(out, "is_lattice", built.is_lattice)
    if not built.is_lattice:
        return 0
    rep = classify(built)
    _emit(out, "bounded", rep.is_bounded)
    _emit(out, "bottom", rep.bottom)
    _emit(out, "top", rep.top)
    _emit(out, "atoms", rep.atoms)
    _emit(out, "anti_atoms", rep.anti_atoms)
    _emit(out, "atomic", rep.is_atomic)
    _emit(out, "anti_atomic", rep.is_anti_atomic)
    _emit(out, "height", rep.lattice_height)
    _emit(out, "length", rep.length)
    _emit(out, "width", rep.width)
    for chain in rep.min_chain_partition:
        _emit(out, "chain", "<".join(str(c) for c in chain))
    _emit(out, "modular", rep.is_modular)
    if rep.n5_witness:
        _emit(out, "modular_witness", rep.n5_witness)
    _emit(out, "distributive", rep.is_distributive)
    if rep.distributive_witness:
        _emit(out, "distributive_witness", rep.distributive_witness)
    _emit(out, "complementation", rep.complementation_class)
    _emit(out, "boolean", rep.is_boolean)
    return 0


def cmd_ortho(args, out):
    doc, built = _load_built(args.file)
    _require_lattice(built)
    if not doc.ortho:
        raise LatticeError("no ortho stanza in input")
    ol = attach_ortho(built, doc.ortho)
    _emit(out, "classes", sorted(ortho_class(ol)))
    rel = relations_of(ol)
    _emit(out, "orthogonal_pairs", len(rel.orthogonal))
    _emit(out, "center", rel.center)
    return 0


def cmd_negation(args, out):
    doc, built = _load_built(args.file)
    _require_lattice(built)
    neg = doc.negation or doc.ortho
    if not neg:
        raise LatticeError("no negation or ortho stanza in input")
    nm = classify_negation(built, neg)
    _emit(out, "classification", sorted(nm.classification))
    rel = relations(built, neg)
    _emit(out, "orthogonal_pairs", len(rel.orthogonal))
    _emit(out, "center", rel.center)
    return 0


def cmd_metric(args, out):
    from .valuation import check_valuation, metric_from_valuation

    doc, built = _load_built(args.file)
    _require_lattice(built)
    if not doc.valuation:
        raise LatticeError("no valuation stanza in input")
    chk = check_valuation(built, doc.valuation)
    _emit(out, "valuation", chk.is_valuation)
    _emit(out, "isotone", chk.is_isotone)
    if not chk.is_valuation:
        _emit(out, "witness", chk.witness)
        return 1
    if not chk.is_isotone:
        return 1
    metric = metric_from_valuation(built, doc.valuation)
    print("x\ty\td", file=out)
    for a in built.labels:
        for b in built.labels:
            print(f"{a}\t{b}\t{metric.d(a, b)}", file=out)
    return 0


def cmd_reduce(args, out):
    top = boolean_carrier(args.n)
    levels = reduce_boolean(top, best_effort=args.best_effort)
    for lvl in levels:
        print(format_carrier(lvl.carrier), file=out)
    _emit(out, "count", len(levels))
    return 0


def _read_choices(path, n):
    choices = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                choices.append(tuple(parse_mask(tok, n) for tok in line.split()))
    return choices


def cmd_primorial(args, out):
    choices = _read_choices(args.choices, args.n) if args.choices else None
    pl = generate_primorial(args.n, choices=choices, best_effort=args.best_effort)
    for name in pl.member_names():
        print(f"{name}\t{format_carrier(pl.level(name).carrier)}", file=out)
    return 0


def cmd_dposet(args, out):
    pl = generate_primorial(args.n, best_effort=args.best_effort)
    members, diff, leq = chain_dposet_members(pl)
    report = dposet_check(members, diff, leq)
    for law in ("axiom-1", "axiom-2", "axiom-3", "axiom-4",
                "derived-1", "derived-2", "derived-3", "derived-4"):
        status = "fail" if law in report.failures else "pass"
        _emit(out, law, status)
    return 0 if report.ok else 1


def cmd_project(args, out):
    pl = generate_primorial(args.n, best_effort=args.best_effort)
    with open(args.input, "r", encoding="utf-8") as fh:
        tokens = fh.read().split()
    items = [parse_mask(tok, args.n) for tok in tokens]
    print("position\tinput\tprojected", file=out)
    for k, x in enumerate(items):
        y = project(pl, args.level, x, args.method)
        print(f"{k}\t{format_mask(x)}\t{format_mask(y)}", file=out)
    return 0


def cmd_probability(args, out):
    if args.random_boolean:
        lat = boolean_carrier(args.random_boolean).lattice
        full = (1 << args.random_boolean) - 1
        neg = {x: full ^ x for x in lat.labels}
        values = random_boolean_assignment(lat, random.Random(args.seed))
        _emit(out, "seed", args.seed)
    else:
        if not args.file:
            raise LatticeError("probability needs a lattice file or --random-boolean N")
        doc, lat = _load_built(args.file)
        _require_lattice(lat)
        neg = doc.negation or doc.ortho
        if not neg:
            raise LatticeError("no negation or ortho stanza in input")
        if not doc.prob:
            raise LatticeError("no prob stanza in input")
        values = doc.prob
    pa = validate_probability(lat, neg, values)
    _emit(out, "valid", True)
    report = probability_report(pa)
    for name in DEFINITIONS:
        verdict = report[name]
        _emit(out, name, "satisfied" if verdict.satisfied else "violated")
        if verdict.witness:
            what, elems, lhs, rhs = verdict.witness
            _emit(out, f"{name}_witness", f"{what} at {_fmt(elems)}: {lhs} != {rhs}")
    return 0


def cmd_analyze(args, out):
    preset = gsp_preset(args.preset)
    for line in preset.describe():
        print(line, file=sys.stderr)
    with open(args.fasta, "r", encoding="utf-8") as fh:
        records = load_fasta(fh, preset.alphabet)
    for name, tokens in records:
        pyramid = analyze(preset.primorial, preset.alphabet, tokens, args.method)
        print(f"# record {name}", file=out)
        for row in pyramid_rows(pyramid, preset.alphabet):
            print("\t".join(row), file=out)
        for line in summarize(pyramid, preset.alphabet, preset.coarse_atoms, args.window):
            print(f"{name}: {line}", file=sys.stderr)
    return 0


def cmd_enumerate(args, out):
    lats = enumerate_lattices(args.n)
    if args.n == 0:
        print("lattices: 1 modular: 1 distributive: 1", file=out)
        return 0
    reports = [classify(lat) for lat in lats]
    modular = sum(1 for r in reports if r.is_modular)
    distributive = sum(1 for r in reports if r.is_distributive)
    print(f"lattices: {len(lats)} modular: {modular} distributive: {distributive}", file=out)
    if args.show:
        for lat in lats:
            covers = " ".join(f"{a}<{b}" for a, b in lat.covers)
            print(covers, file=out)
    return 0


def cmd_hasse(args, out):
    doc, built = _load_built(args.file)
    dot = to_dot(built, name=doc.name or "hasse")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        out.write(dot)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="primlat", description="finite lattice computation engine"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural report for a lattice file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("ortho", help="validate the ortho stanza and report classes")
    p.add_argument("file")
    p.set_defaults(fn=cmd_ortho)

    p = sub.add_parser("negation", help="classify the negation stanza")
    p.add_argument("file")
    p.set_defaults(fn=cmd_negation)

    p = sub.add_parser("metric", help="validate a valuation and print its metric")
    p.add_argument("file")
    p.set_defaults(fn=cmd_metric)

    p = sub.add_parser("reduce", help="half-size Boolean sub-levels of a 2^n carrier")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--best-effort", action="store_true")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("primorial", help="emit the generated family's members")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--choices", help="file of per-step carrier choices (subset literals)")
    p.add_argument("--best-effort", action="store_true")
    p.set_defaults(fn=cmd_primorial)

    p = sub.add_parser("dposet", help="check the difference axioms on the chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--best-effort", action="store_true")
    p.set_defaults(fn=cmd_dposet)

    p = sub.add_parser("project", help="project a sequence file onto a level")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", required=True)
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--best-effort", action="store_true")
    p.set_defaults(fn=cmd_project)

    p = sub.add_parser("probability", help="validate and compare a probability assignment")
    p.add_argument("file", nargs="?")
    p.add_argument("--random-boolean", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_probability)

    p = sub.add_parser("analyze", help="project a FASTA file onto every level")
    p.add_argument("--preset", choices=PRESETS, required=True)
    p.add_argument("--fasta", required=True)
    p.add_argument("--method", choices=METHODS, default="ceiling")
    p.add_argument("--window", type=int)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("enumerate", help="count unlabeled lattices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--show", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("hasse", help="emit a DOT Hasse diagram")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_hasse)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except (LatticeError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
