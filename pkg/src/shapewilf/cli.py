"""Command line interface.

Exit status: 0 on success, 1 when a verification scan found a mismatch
against published values (or an --expect assertion failed), 2 on usage
errors, including malformed shapes, patterns, and contents.
"""

import argparse
import json
import sys

from .core import (
    BadComposition,
    ContentMismatch,
    Filling,
    InvalidPattern,
    NotAvoiding,
    NotFerrers,
    ShapeMismatch,
    format_word,
    parse_composition,
    parse_patterns,
    parse_shape,
    parse_word,
)
from .bijection import VARIANTS, alpha_sequence, blowup, i_sequence, n_sequence, shrink
from .bijection import alpha as alpha_map
from .bijection import alpha_inverse as alpha_inverse_map
from .matcher import contains
from .enumeration import (
    POSITIVE_ROWS,
    UNCONSTRAINED,
    ResultCache,
    counted,
    enumerate_fillings,
)
from .harness import (
    VERDICT_EQUAL,
    VERDICT_UNEQUAL,
    reproduce_table,
    scan_conjecture1,
    scan_conjecture2,
    check_equivalence,
)

USAGE_ERRORS = (
    NotFerrers,
    InvalidPattern,
    BadComposition,
    ContentMismatch,
    ShapeMismatch,
    NotAvoiding,
    ValueError,
)


def _parse_content(text: str):
    if text in (UNCONSTRAINED, "all"):
        return UNCONSTRAINED
    if text in (POSITIVE_ROWS, "positive"):
        return POSITIVE_ROWS
    return parse_composition(text)


def _open_cache(args):
    return ResultCache(args.cache) if getattr(args, "cache", None) else None


def _emit_report(report, args) -> None:
    if args.out == "json":
        print(report.to_json())
    elif args.out == "csv":
        print(report.to_csv(), end="")
    else:
        for mismatch in report.mismatches:
            print(
                f"MISMATCH shape={mismatch.shape} content={mismatch.content} "
                f"{mismatch.a} vs {mismatch.b}" + (f" ({mismatch.note})" if mismatch.note else "")
            )
        print(f"verdict: {report.verdict} ({len(report.records)} counts)")


def _cmd_count(args) -> int:
    shape = parse_shape(args.shape)
    patterns = parse_patterns(args.patterns)
    content = _parse_content(args.content)
    record = counted(shape, content, patterns, cache=_open_cache(args), jobs=args.jobs)
    if args.out == "json":
        print(json.dumps(record.to_json()))
    else:
        print(record.count)
    return 0


def _cmd_count_words(args) -> int:
    rectangle = parse_shape(",".join([str(args.length)] * args.alphabet))
    patterns = parse_patterns(args.patterns)
    record = counted(rectangle, UNCONSTRAINED, patterns, cache=_open_cache(args), jobs=args.jobs)
    if args.out == "json":
        out = record.to_json()
        out.update({"length": args.length, "alphabet": args.alphabet})
        print(json.dumps(out))
    else:
        print(record.count)
    return 0


def _cmd_enumerate(args) -> int:
    shape = parse_shape(args.shape)
    patterns = parse_patterns(args.patterns)
    content = _parse_content(args.content)
    kwargs = {}
    if content == POSITIVE_ROWS:
        kwargs["positive"] = True
    elif content != UNCONSTRAINED:
        kwargs["content"] = content
    fillings = enumerate_fillings(shape, patterns, **kwargs)
    if args.out == "json":
        print(json.dumps([list(f.col_to_row) for f in fillings]))
    else:
        for filling in fillings:
            print(format_word(filling.col_to_row))
    return 0


def _cmd_bijection(args) -> int:
    variant = VARIANTS[args.theorem]
    shape = parse_shape(args.shape)
    content = parse_composition(args.content)
    filling = Filling(shape, parse_word(args.filling))
    if args.inverse:
        direction, avoid = variant.inverse_direction, variant.target
        step, step_name = alpha_inverse_map, "alpha_inverse"
    else:
        direction, avoid = variant.forward_direction, variant.source
        step, step_name = alpha_map, "alpha"
    for pattern in avoid:
        if contains(filling, pattern):
            raise NotAvoiding(f"input filling contains {format_word(pattern)}")
    placement, bands = blowup(filling, content, direction)
    image_placement = step(placement)
    image = shrink(image_placement, bands)
    document = {
        "variant": args.theorem,
        "direction": "inverse" if args.inverse else "forward",
        "avoids": [format_word(p) for p in avoid],
        "shape": args.shape,
        "content": args.content,
        "filling": format_word(filling.col_to_row),
        "blowup": {
            "shape": ",".join(str(r) for r in placement.shape.rows),
            "placement": format_word(placement.col_to_row),
            "stacking": direction.value,
        },
        "i_sequence": list(i_sequence(placement)),
        "n_sequence": list(n_sequence(placement)),
        "transformed_sequence": list(
            alpha_sequence(placement) if not args.inverse else i_sequence(image_placement)
        ),
        step_name: format_word(image_placement.col_to_row),
        "image": format_word(image.col_to_row),
    }
    print(json.dumps(document, indent=2))
    return 0


def _cmd_table(args) -> int:
    report = reproduce_table(args.table, jobs=args.jobs, cache=_open_cache(args))
    _emit_report(report, args)
    return 0 if report.verdict == VERDICT_EQUAL else 1


def _cmd_check_equiv(args) -> int:
    report = check_equivalence(
        parse_patterns(args.omega),
        parse_patterns(args.sigma),
        args.max_cols,
        args.max_rows,
        jobs=args.jobs,
        cache=_open_cache(args),
    )
    _emit_report(report, args)
    if args.expect and report.verdict != args.expect:
        print(f"expected verdict {args.expect}, got {report.verdict}", file=sys.stderr)
        return 1
    return 0


def _cmd_scan_conj1(args) -> int:
    report = scan_conjecture1(args.max_cols, args.max_rows, jobs=args.jobs, cache=_open_cache(args))
    if args.out == "plain":
        for rec_a, rec_b in report.strict_inequalities():
            print(f"strict: {rec_a.to_json()['shape']}: {rec_a.count} < {rec_b.count}")
    _emit_report(report, args)
    return 0


def _cmd_scan_conj2(args) -> int:
    report = scan_conjecture2(
        parse_word(args.beta),
        args.max_length,
        args.max_alphabet,
        jobs=args.jobs,
        cache=_open_cache(args),
    )
    _emit_report(report, args)
    if args.out == "plain" and report.verdict == VERDICT_UNEQUAL:
        witness = report.mismatches[0]
        print(f"witness: {witness.note}: {witness.a} vs {witness.b}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shapewilf",
        description="Count, enumerate and map pattern-avoiding fillings of Ferrers shapes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, content_default=None):
        p.add_argument("--patterns", default="", help="pattern set, e.g. 231 or 231+221")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (counts only)")
        p.add_argument("--cache", help="append-only JSONL result cache")
        p.add_argument("--out", choices=["plain", "json", "csv"], default="plain")
        if content_default is not None:
            p.add_argument(
                "--content",
                default=content_default,
                help="composition like 2,2,1, or 'all'/'unconstrained', or 'positive'",
            )

    p = sub.add_parser("count", help="count avoiding fillings of one shape")
    p.add_argument("--shape", required=True, help="row lengths bottom to top, e.g. 5,5,4")
    common(p, content_default=UNCONSTRAINED)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("count-words", help="count avoiding words of given length/alphabet")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_count_words)

    p = sub.add_parser("enumerate", help="stream the avoiding fillings of one shape")
    p.add_argument("--shape", required=True)
    common(p, content_default=UNCONSTRAINED)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("bijection", help="apply an equivalence map to one filling")
    p.add_argument("--theorem", choices=sorted(VARIANTS), required=True,
                   help="11: {231,221}<->{312,212}; 12: {231,121}<->{312,211}")
    p.add_argument("--shape", required=True)
    p.add_argument("--content", required=True)
    p.add_argument("--filling", required=True, help="rows of the 1's by column, e.g. 1465213233")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("table", help="recompute a published table and compare")
    p.add_argument("table", type=int, choices=[1, 2, 3, 4])
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check-equiv", help="compare two pattern sets over bounded shapes")
    p.add_argument("omega")
    p.add_argument("sigma")
    p.add_argument("--max-cols", type=int, required=True)
    p.add_argument("--max-rows", type=int, required=True)
    p.add_argument("--expect", choices=[VERDICT_EQUAL, VERDICT_UNEQUAL])
    common(p)
    p.set_defaults(func=_cmd_check_equiv)

    p = sub.add_parser("scan-conj1", help="scan the 231-vs-312 count inequality over shapes")
    p.add_argument("--max-cols", type=int, required=True)
    p.add_argument("--max-rows", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_scan_conj1)

    p = sub.add_parser("scan-conj2", help="scan word counts of 231+beta vs 312+beta")
    p.add_argument("--beta", default="", help="permutation tail, e.g. 1 or 12; empty allowed")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--max-alphabet", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_scan_conj2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
