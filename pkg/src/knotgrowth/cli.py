"""Command line interface.

Subcommands cover the pipeline end to end: `present` and `classes` work on
any diagram, `verify` checks the stated isomorphisms for the torus, twist
and double twist families, `probe` tests the three-region conjecture, and
`growth`/`skew`/`gkdim`/`rmove` cover the series side.

Exit codes: 0 success (for verify, a fully positive verdict; for rmove,
equal dimensions), 1 verdict not fully positive, 2 bad arguments or input,
3 word budget exceeded, 4 internal consistency failure.  The default word
budget can be overridden with the KNOTGROWTH_BUDGET environment variable or
the --budget flag, the flag winning.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from .diagrams import (
    Diagram,
    ReidemeisterMove,
    apply_reidemeister,
    build_family,
    load_pd,
    parse_family_spec,
)
from .errors import (
    InternalConsistencyError,
    KnotgrowthError,
    ParameterError,
    ResourceBudgetError,
)
from .growth import (
    GrowthSeries,
    gk_dimension,
    growth_for_family,
    growth_from_counts,
    reidemeister_dimension_check,
    skew_growth,
)
from .oracle import (
    DEFAULT_WORD_BUDGET,
    conjecture_probe,
    enumerate_classes,
    verify_dtw,
    verify_torus,
    verify_twist,
)
from .presentation import presentation_from_diagram

SCHEMA_VERSION = 1

GROWTH_FAMILIES = ("trivial", "hopf", "torus2", "twist", "dtw")


def _emit_json(payload: dict) -> None:
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    print(json.dumps(payload, sort_keys=True, indent=2))


def _poly_text(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        power = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(c)
        body = power if (mag == 1 and power) else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _resolve_budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        budget = args.budget
    else:
        raw = os.environ.get("KNOTGROWTH_BUDGET")
        if raw is None:
            return DEFAULT_WORD_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            raise ParameterError(
                f"KNOTGROWTH_BUDGET must be an integer, got {raw!r}"
            ) from None
    if budget < 1:
        raise ParameterError(f"budget must be positive, got {budget}")
    return budget


def _check_window(args) -> None:
    if getattr(args, "max_len", None) is not None and args.max_len < 1:
        raise ParameterError(f"--max-len must be at least 1, got {args.max_len}")
    if getattr(args, "pad", None) is not None and args.pad < 0:
        raise ParameterError(f"--pad must not be negative, got {args.pad}")
    if getattr(args, "terms", None) is not None and args.terms < 2:
        raise ParameterError(f"--terms must be at least 2, got {args.terms}")


def _diagram_from_args(args) -> tuple[Diagram, str]:
    if args.pd is not None:
        return load_pd(args.pd), f"pd:{args.pd}"
    spec = parse_family_spec(args.family)
    return build_family(spec), args.family


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParameterError(f"{flag} needs a comma-separated integer list, got {text!r}") from None
    if not values:
        raise ParameterError(f"{flag} list is empty")
    return values


def _load_counts(arg: str) -> tuple[int, ...]:
    """Counts from a file (the classes CSV, or bare numbers) or an inline
    comma-separated list."""
    path = Path(arg)
    if path.exists():
        text = path.read_text()
    else:
        text = arg
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParameterError("counts input is empty")
    counts: list[int] = []
    if lines[0].replace(" ", "").lower() == "degree,count":
        for i, line in enumerate(lines[1:], start=1):
            fields = line.split(",")
            try:
                degree, count = (int(f) for f in fields)
            except ValueError:
                raise ParameterError(f"bad counts row {line!r}") from None
            if degree != i:
                raise ParameterError(
                    f"counts rows must cover degrees 1,2,... in order; row {i} "
                    f"has degree {degree}"
                )
            counts.append(count)
    else:
        for line in lines:
            for f in line.split(","):
                f = f.strip()
                if not f:
                    continue
                try:
                    counts.append(int(f))
                except ValueError:
                    raise ParameterError(f"bad count {f!r}") from None
    if not counts:
        raise ParameterError("counts input is empty")
    return tuple(counts)


def _parse_site(text: str) -> dict:
    """Parse 'arc=0,end=1' or 'crossings=0+2+4' into move fields."""
    site: dict = {}
    if not text:
        return site
    for chunk in text.split(","):
        key, eq, value = chunk.partition("=")
        key = key.strip()
        if not eq:
            raise ParameterError(f"site entry {chunk!r} is not key=value")
        if key == "crossings":
            try:
                site[key] = tuple(int(x) for x in value.split("+"))
            except ValueError:
                raise ParameterError(f"bad crossing list {value!r}") from None
        elif key in ("arc", "end", "over_arc"):
            try:
                site[key] = int(value)
            except ValueError:
                raise ParameterError(f"site entry {key} needs an integer, got {value!r}") from None
        else:
            raise ParameterError(
                f"unknown site key {key!r}; expected arc, end, over_arc or crossings"
            )
    return site


# -- subcommand handlers ------------------------------------------------------


def _cmd_present(args) -> int:
    diagram, label = _diagram_from_args(args)
    pres = presentation_from_diagram(diagram)
    if args.format == "text":
        names = ", ".join(pres.name_of(i) for i in range(pres.alphabet_size))
        print(f"family: {label}")
        print(f"letters: {pres.alphabet_size} ({names})")
        print(f"relations: {len(pres.relations)}")
        for lhs, rhs in pres.relations:
            print(f"  {pres.format_word(lhs)} = {pres.format_word(rhs)}")
        return 0
    _emit_json(pres.to_dict())
    return 0


def _cmd_classes(args) -> int:
    _check_window(args)
    budget = _resolve_budget(args)
    diagram, label = _diagram_from_args(args)
    pres = presentation_from_diagram(diagram)
    partition = enumerate_classes(pres, args.max_len, pad=args.pad, budget=budget)
    if args.format == "json":
        _emit_json(
            {
                "family": label,
                "max_len": args.max_len,
                "pad": args.pad,
                "counts": list(partition.degree_counts),
            }
        )
        return 0
    print("degree,count")
    for degree, count in enumerate(partition.degree_counts, start=1):
        print(f"{degree},{count}")
    return 0


def _verify_report(args):
    _check_window(args)
    budget = _resolve_budget(args)
    params = _parse_int_list(args.params, "--params")
    arity = {"torus": 1, "torus-link": 1, "twist": 1, "dtw": 2}[args.theorem]
    if len(params) != arity:
        raise ParameterError(
            f"theorem {args.theorem!r} takes {arity} parameter(s), got {len(params)}"
        )
    default_len = 3 if args.theorem in ("twist", "dtw") else 4
    max_len = args.max_len if args.max_len is not None else default_len
    if args.theorem in ("torus", "torus-link"):
        (n,) = params
        report = verify_torus(n, max_len, pad=args.pad, budget=budget)
        report = replace(report, description=f"{args.theorem}:{n}")
        if args.theorem == "torus" and n % 2 == 0:
            report = replace(
                report,
                warnings=report.warnings
                + (f"n = {n} is even: the braid closes to a two-component link",),
            )
        if args.theorem == "torus-link" and n % 2 == 1:
            report = replace(
                report,
                warnings=report.warnings
                + (f"n = {n} is odd: the braid closes to a knot",),
            )
        return report
    if args.theorem == "twist":
        return verify_twist(params[0], max_len, pad=args.pad, budget=budget)
    n, l = params
    return verify_dtw(n, l, max_len, pad=args.pad, budget=budget)


def _print_report(report, fmt: str) -> None:
    if fmt == "json":
        _emit_json(report.to_json_dict())
        return
    print(f"subject: {report.description}")
    print(f"target: {report.semigroup}")
    if report.phi is not None:
        print(f"letter map: {', '.join(map(str, report.phi))}")
    print(f"homomorphism: {'yes' if report.homomorphism else 'no'}")
    for d in report.degrees:
        print(
            f"degree {d.degree}: classes={d.class_count} "
            f"elements={d.element_count} {d.verdict}"
        )
    for note in report.warnings:
        print(f"note: {note}")
    verified = sum(1 for d in report.degrees if d.verdict == "verified")
    status = "VERIFIED" if report.all_verified else "UNRESOLVED"
    print(f"result: {status} ({verified}/{len(report.degrees)} degrees)")


def _cmd_verify(args) -> int:
    report = _verify_report(args)
    _print_report(report, args.format)
    return 0 if report.all_verified else 1


def _cmd_probe(args) -> int:
    _check_window(args)
    budget = _resolve_budget(args)
    params = _parse_int_list(args.params, "--params")
    if len(params) != 3:
        raise ParameterError(f"the cmln conjecture takes 3 parameters, got {len(params)}")
    m, l, n = params
    report = conjecture_probe(
        m,
        l,
        n,
        max_len=args.max_len,
        pad=args.pad,
        budget=budget,
        search_anchors=not args.no_search,
    )
    _print_report(report, args.format)
    # the verdicts are findings; reaching a report is success
    return 0


def _growth_series(args) -> GrowthSeries:
    terms = args.terms + 1  # coefficients through degree --terms
    if args.counts is not None:
        series = growth_from_counts(_load_counts(args.counts))
        if series.rational is not None and terms > len(series.coefficients):
            series = GrowthSeries(
                series.rational.expand(terms),
                rational=series.rational,
                source=series.source,
                warnings=series.warnings,
            )
        return series
    spec = parse_family_spec(args.family)
    if spec.kind not in GROWTH_FAMILIES:
        raise ParameterError(
            f"no stated growth for family {spec.kind!r}; count classes first "
            "and pass them with --counts"
        )
    return growth_for_family(spec.kind, spec.params, terms=terms)


def _print_series_csv(coefficients) -> None:
    print("degree,coefficient")
    for degree, c in enumerate(coefficients):
        print(f"{degree},{c}")


def _cmd_growth(args) -> int:
    _check_window(args)
    series = _growth_series(args)
    if args.format == "json":
        _emit_json(series.to_json_dict())
        return 0
    _print_series_csv(series.coefficients)
    for note in series.warnings:
        print(f"# note: {note}", file=sys.stderr)
    if args.rational:
        if series.rational is None:
            print("null")
        else:
            print(json.dumps(series.rational.to_json_dict(), sort_keys=True))
    return 0


def _cmd_skew(args) -> int:
    _check_window(args)
    series = _growth_series(args)
    terms = args.terms + 1
    skew = skew_growth(series, terms=min(terms, len(series.coefficients))
                       if series.rational is None else terms)
    if args.format == "json":
        _emit_json(skew.to_json_dict())
        return 0
    _print_series_csv(skew.coefficients)
    return 0


def _cmd_gkdim(args) -> int:
    _check_window(args)
    if args.counts is not None:
        source = growth_from_counts(_load_counts(args.counts))
        label = "counts"
    else:
        spec = parse_family_spec(args.family)
        label = args.family
        if spec.kind in GROWTH_FAMILIES:
            source = growth_for_family(spec.kind, spec.params, terms=args.terms + 1)
        else:
            if args.max_len is None:
                raise ParameterError(
                    f"family {spec.kind!r} has no stated growth; give --max-len "
                    "to measure it through the congruence closure"
                )
            budget = _resolve_budget(args)
            pres = presentation_from_diagram(build_family(spec))
            partition = enumerate_classes(pres, args.max_len, pad=args.pad, budget=budget)
            source = growth_from_counts(partition.degree_counts, source=args.family)
    estimate = gk_dimension(
        source,
        method=args.method,
        ratio_delta=args.ratio_delta,
        diff_window=args.diff_window,
        ratio_window=args.ratio_window,
    )
    if args.format == "text":
        print(f"source: {label}")
        print(f"gk: {estimate.label()}")
        print(f"method: {estimate.method}")
        return 0
    payload = estimate.to_json_dict()
    payload["source"] = label
    _emit_json(payload)
    return 0


def _cmd_rmove(args) -> int:
    _check_window(args)
    budget = _resolve_budget(args)
    diagram, label = _diagram_from_args(args)
    site = _parse_site(args.site)
    move = ReidemeisterMove(kind=args.move, direction=args.direction, **site)
    moved = apply_reidemeister(diagram, move)
    report = reidemeister_dimension_check(
        diagram,
        moved,
        args.max_len,
        pad=args.pad,
        budget=budget,
        description=f"{label} {args.move} {args.direction}",
    )
    if args.format == "text":
        print(f"move: {args.move} {args.direction} on {label}")
        print(f"arcs: {diagram.arc_count} -> {moved.arc_count}")
        for row in report.degrees:
            mark = "equal" if row.equal else "DIFFER"
            print(
                f"degree {row.degree}: cumulative {row.left_cumulative} vs "
                f"{row.right_cumulative} {mark}"
            )
        print(f"result: {'EQUAL' if report.all_equal else 'DIFFER'}")
    else:
        _emit_json(report.to_json_dict())
    return 0 if report.all_equal else 1


# -- parser -------------------------------------------------------------------


def _add_diagram_args(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="family spec, e.g. torus2:3 or dtw:2,2")
    group.add_argument("--pd", help="path to a diagram JSON file")
    return sub


def _add_closure_args(sub, max_len_required: bool = True):
    sub.add_argument(
        "--max-len",
        type=int,
        required=max_len_required,
        default=None,
        help="largest word length to count",
    )
    sub.add_argument("--pad", type=int, default=2, help="extra closure degrees (default 2)")
    sub.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"word universe cap (default {DEFAULT_WORD_BUDGET}, env KNOTGROWTH_BUDGET)",
    )
    return sub


def _add_format_arg(sub, choices, default):
    sub.add_argument("--format", choices=choices, default=default)
    return sub


def _add_series_source(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="trivial, hopf, torus2:n, twist:n or dtw:n,l")
    group.add_argument(
        "--counts",
        help="per-degree counts: a classes CSV file, a file of numbers, or an "
        "inline list like 4,5,5,5",
    )
    return sub


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotgrowth",
        description="Knot semigroup presentations, congruence counting and growth.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("present", help="print the semigroup presentation of a diagram")
    _add_diagram_args(p)
    _add_format_arg(p, ("json", "text"), "json")
    p.set_defaults(run=_cmd_present)

    p = subs.add_parser("classes", help="count congruence classes per degree")
    _add_diagram_args(p)
    _add_closure_args(p)
    _add_format_arg(p, ("csv", "json"), "csv")
    p.set_defaults(run=_cmd_classes)

    p = subs.add_parser("verify", help="check a stated isomorphism for a family")
    p.add_argument(
        "--theorem", choices=("torus", "torus-link", "twist", "dtw"), required=True
    )
    p.add_argument("--params", required=True, help="e.g. 3 for torus, 2,2 for dtw")
    _add_closure_args(p, max_len_required=False)
    _add_format_arg(p, ("json", "text"), "json")
    p.set_defaults(run=_cmd_verify)

    p = subs.add_parser("probe", help="probe a stated conjecture")
    p.add_argument("--conjecture", choices=("cmln",), required=True)
    p.add_argument("--params", required=True, help="twist counts m,l,n")
    _add_closure_args(p, max_len_required=False)
    p.set_defaults(max_len=3)
    p.add_argument("--no-search", action="store_true", help="only try the natural anchors")
    _add_format_arg(p, ("json", "text"), "json")
    p.set_defaults(run=_cmd_probe)

    p = subs.add_parser("growth", help="growth series of a family or counts")
    _add_series_source(p)
    p.add_argument("--terms", type=int, default=10, help="expand through this degree")
    p.add_argument("--rational", action="store_true", help="also print the rational form")
    _add_format_arg(p, ("csv", "json"), "csv")
    p.set_defaults(run=_cmd_growth)

    p = subs.add_parser("skew", help="skew growth series (reciprocal of growth)")
    _add_series_source(p)
    p.add_argument("--terms", type=int, default=10, help="expand through this degree")
    _add_format_arg(p, ("csv", "json"), "csv")
    p.set_defaults(run=_cmd_skew)

    p = subs.add_parser("gkdim", help="estimate the growth exponent")
    _add_series_source(p)
    p.add_argument("--terms", type=int, default=12, help="series degrees to examine")
    _add_closure_args(p, max_len_required=False)
    p.add_argument("--method", choices=("rational", "difference", "ratio"), default=None)
    p.add_argument("--ratio-delta", type=float, default=0.2)
    p.add_argument("--diff-window", type=int, default=3)
    p.add_argument("--ratio-window", type=int, default=4)
    _add_format_arg(p, ("json", "text"), "json")
    p.set_defaults(run=_cmd_gkdim)

    p = subs.add_parser("rmove", help="apply a diagram move and compare dimensions")
    _add_diagram_args(p)
    p.add_argument("--move", choices=("r1", "r2", "r3"), required=True)
    p.add_argument("--direction", choices=("insert", "remove"), default="insert")
    p.add_argument(
        "--site",
        default="",
        help="move site, e.g. arc=0,end=0 or crossings=0+1 (join indices with +)",
    )
    _add_closure_args(p)
    _add_format_arg(p, ("json", "text"), "json")
    p.set_defaults(run=_cmd_rmove)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.run(args)
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except (KnotgrowthError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
