"""Command-line interface: ``bivinc <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2
for usage errors (bad flags, malformed patterns or words).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from bivinc import __version__, closed_forms, engine, enumeration, oeis
from bivinc import bijections as bij
from bivinc.catalog import CATALOG
from bivinc.patterns import canonical_representative, contains, count_occurrences, parse_pattern
from bivinc.perms import ParseError, Permutation, permutations_of
from bivinc.report import FORMATS, ReportDocument, emit_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _word(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(t) for t in text.split(","))
        return tuple(int(c) for c in text)
    except ValueError:
        raise UsageError(f"malformed word {text!r}") from None


def _patterns(texts) -> list:
    return [parse_pattern(t) for t in texts]


# -- subcommands ------------------------------------------------------------------


def cmd_avoid(args, out) -> int:
    seq = enumeration.avoidance_sequence(_patterns(args.pattern), args.n, args.jobs)
    print(",".join(map(str, seq.terms)), file=out)
    return EXIT_OK


def cmd_distribution(args, out) -> int:
    table = enumeration.distribution(parse_pattern(args.pattern), args.n, args.jobs)
    for i, row in enumerate(table.rows, start=1):
        cells = " ".join(f"{j}:{c}" for j, c in row.items())
        print(f"n={i}  {cells}", file=out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    report = enumeration.wilf_classify(args.k, args.horizon, args.jobs)
    out.write(emit_report(ReportDocument.from_classification(report), args.format))
    return EXIT_OK


def cmd_symmetry(args, out) -> int:
    classes = enumeration.symmetry_partition(args.k)
    if args.count:
        print(len(classes), file=out)
        return EXIT_OK
    for c in classes:
        rep = canonical_representative(c)
        others = sorted(str(p) for p in c if p != rep)
        print(f"{rep}\t{len(c)}\t{' '.join(others)}", file=out)
    return EXIT_OK


def cmd_burnside(args, out) -> int:
    value = enumeration.burnside_direct(args.n) if args.direct else enumeration.burnside_s(args.n)
    print(value, file=out)
    for note in enumeration.burnside_notes(args.n):
        print(f"note: {note}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ids = [args.id] if args.id else None
    if args.id and args.id not in CATALOG:
        raise UsageError(f"unknown formula id {args.id!r}")
    if args.id and closed_forms.eval_closed_form(args.id, 1) is None:
        print(f"{args.id}: no closed form to verify", file=out)
        return EXIT_OK
    rep = closed_forms.verify_registry(args.n, ids=ids, jobs=args.jobs)
    bad = {m.id for m in rep.mismatches}
    for i, count in sorted(rep.checked.items()):
        status = "MISMATCH" if i in bad else "ok"
        print(f"{i}\t{status}\t{count} patterns, n=1..{args.n}", file=out)
    for m in rep.mismatches:
        print(f"mismatch {m.id} {m.pattern} n={m.n}: formula {m.expected}, brute force {m.observed}",
              file=out)
    print(f"{len(rep.checked)} ids, {len(rep.mismatches)} mismatches", file=out)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


# -- bijections ---------------------------------------------------------------------


def _apply_map(name: str, w: tuple[int, ...]):
    if name in ("f", "g", "h") and (not w or w[0] == 0):
        if not bij.is_ascent_sequence(w):
            raise UsageError(f"{w} is not an ascent sequence")
        return {"f": bij.map_f, "g": bij.map_g_inverse, "h": bij.map_h}[name](w)
    try:
        pi = Permutation(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if name == "f":
        return bij.insertion_word(pi, bij.P231)
    if name == "g":
        return bij.map_g(pi)
    if name == "h":
        raise UsageError("map h takes an ascent sequence")
    fn = {
        "reverse1": bij.reverse_after_one,
        "shiftB": bij.cyclic_shift_setB,
        "wilf22": bij.wilf22_map,
        "colswap": bij.column_swap_map,
    }[name]
    return fn(pi)


def _check(name: str, N: int) -> tuple[bool, list[str]]:
    lines = []
    ok = True
    for n in range(1, N + 1):
        perms = list(permutations_of(n))
        if name in ("f", "g"):
            pat = bij.P231 if name == "f" else bij.P132
            seqs = list(bij.generate_ascent_sequences(n))
            fwd = bij.map_f if name == "f" else bij.map_g_inverse
            back = (lambda p: bij.insertion_word(p, bij.P231)) if name == "f" else bij.map_g
            images = [fwd(x) for x in seqs]
            avoiders = {p for p in perms if not contains(p, pat)}
            good = set(images) == avoiders and len(set(images)) == len(seqs) and all(
                back(p) == x for p, x in zip(images, seqs))
            detail = f"{len(seqs)} sequences, {len(avoiders)} avoiders"
        elif name == "h":
            if n < 2:
                continue
            seqs = [x for x in bij.generate_ascent_sequences(n) if all(a != b for a, b in zip(x, x[1:]))]
            images = {bij.map_h(x) for x in seqs}
            avoiders = {p for p in permutations_of(n - 1) if not contains(p, bij.P321)}
            good = images == avoiders and len(images) == len(seqs)
            detail = f"{len(seqs)} sequences, {len(avoiders)} avoiders of length {n - 1}"
        elif name == "reverse1":
            good = all(bij.reverse_after_one(bij.reverse_after_one(p)) == p for p in perms)
            detail = "involution"
        elif name == "shiftB":
            target = parse_pattern("132|X=0,1,2|Y=3")
            dom = [p for p in perms if count_occurrences(p, bij.SET_B_SOURCE) == 1]
            img = [bij.cyclic_shift_setB(p) for p in dom]
            cod = [p for p in perms if count_occurrences(p, target) == 1]
            good = set(img) == set(cod) and len(set(img)) == len(dom)
            detail = f"{len(dom)} sources, {len(cod)} targets"
        elif name == "wilf22":
            dom = [p for p in perms if bij.in_wilf22_domain(p)]
            img = [bij.wilf22_map(p) for p in dom]
            good = len(set(img)) == len(dom) and all(bij.in_wilf22_codomain(q) for q in img)
            detail = f"{len(dom)} sources, {len(set(img))} distinct images"
        else:  # colswap
            pat = bij.C12_PATTERN
            dom = [p for p in perms if p.index(n) > 0 and not contains(p, pat)]
            img = [bij.column_swap_map(p) for p in dom]
            good = all(not contains(q, pat) for q in img) and len(set(img)) == len(dom)
            detail = f"{len(dom)} sources"
        ok &= good
        lines.append(f"n={n}\t{'ok' if good else 'FAIL'}\t{detail}")
    return ok, lines


def cmd_bijection(args, out) -> int:
    if args.check:
        ok, lines = _check(args.map, args.n)
        for line in lines:
            print(line, file=out)
        return EXIT_OK if ok else EXIT_MISMATCH
    if args.input is None:
        raise UsageError("--input is required unless --check is given")
    try:
        result = _apply_map(args.map, _word(args.input))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise UsageError(str(exc)) from None
    print(",".join(map(str, result)), file=out)
    return EXIT_OK


# -- oeis ---------------------------------------------------------------------------


def cmd_oeis(args, out) -> int:
    mode = "offline" if args.offline else args.mode
    try:
        if args.action == "lookup":
            terms = _word(",".join(args.terms)) if len(args.terms) > 1 else _word(args.terms[0])
            res = oeis.lookup_by_terms(terms, mode)
            for e in res:
                print(f"{e.id}\t{e.name}", file=out)
            if res.marker:
                print(res.marker, file=out)
            for note in res.notes:
                print(f"note: {note}", file=out)
        else:
            e = oeis.lookup_by_id(args.terms[0], mode)
            print(f"{e.id}\t{e.name}\n{','.join(map(str, e.terms))}", file=out)
            if e.id in oeis.ID_NOTES:
                print(f"note: {oeis.ID_NOTES[e.id]}", file=out)
    except oeis.MalformedIdError as exc:
        raise UsageError(str(exc)) from None
    except oeis.NotFoundError as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except oeis.OeisNetworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# -- report -------------------------------------------------------------------------


def cmd_report(args, out) -> int:
    written = []
    for k, name in ((2, "table1"), (3, "table2")):
        doc = ReportDocument.from_classification(enumeration.wilf_classify(k, args.horizon, args.jobs))
        text = emit_report(doc, args.format)
        if args.output is None:
            out.write(text)
            continue
        target = Path(args.output)
        target.mkdir(parents=True, exist_ok=True)
        path = target / f"{name}.{args.format}"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        written.append(path)
    for path in written:
        print(path, file=out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bivinc", description="Bi-vincular permutation patterns.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def jobs(p):
        p.add_argument("--jobs", type=_positive, default=engine.default_jobs(),
                       help="worker processes for enumeration (default: all cores)")

    p = sub.add_parser("avoid", help="avoidance sequence a_1..a_N")
    p.add_argument("-p", "--pattern", action="append", required=True,
                   help="pattern such as '132|X=0,1|Y=2'; repeat for joint avoidance")
    p.add_argument("-n", type=_positive, default=7)
    jobs(p)
    p.set_defaults(func=cmd_avoid)

    p = sub.add_parser("distribution", help="occurrence histograms d_{i,j}")
    p.add_argument("-p", "--pattern", required=True)
    p.add_argument("-n", type=_positive, default=7)
    jobs(p)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("classify", help="Wilf classes of length-k patterns")
    p.add_argument("-k", type=int, choices=(2, 3), required=True)
    p.add_argument("--horizon", type=_positive, default=7)
    p.add_argument("--format", choices=FORMATS, default="md")
    jobs(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("symmetry", help="symmetry classes of length-k patterns")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("burnside", help="number of symmetry classes s_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--direct", action="store_true", help="count orbits by enumeration")
    p.set_defaults(func=cmd_burnside)

    p = sub.add_parser("verify", help="check closed forms against brute force")
    p.add_argument("--id")
    p.add_argument("-n", type=_positive, default=7)
    jobs(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="apply or check one of the bijections")
    p.add_argument("map", choices=("f", "g", "h", "reverse1", "shiftB", "wilf22", "colswap"))
    p.add_argument("--input")
    p.add_argument("--check", choices=("roundtrip",))
    p.add_argument("-n", type=_positive, default=7)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("oeis", help="OEIS lookups")
    p.add_argument("action", choices=("lookup", "id"))
    p.add_argument("terms", nargs="+", help="terms (lookup) or an id such as A000142")
    p.add_argument("--mode", choices=oeis.MODES, default="cached")
    p.add_argument("--offline", action="store_true", help="use only the bundled snapshot")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("report", help="regenerate the classification tables")
    p.add_argument("what", choices=("tables",))
    p.add_argument("--format", choices=FORMATS, default="md")
    p.add_argument("--horizon", type=_positive, default=7)
    p.add_argument("-o", "--output", help="directory for table1.<fmt> and table2.<fmt>")
    jobs(p)
    p.set_defaults(func=cmd_report)
    return parser


def run_command(argv, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, UsageError) as exc:
        print(f"bivinc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # guard violations (horizons, lengths) are usage errors too
        print(f"bivinc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
