"""Command-line interface.

Exit status: 0 when the data conform (or a check passes), 2 when the
conformity test rejects (or a reproduction check fails), 1 on any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from citebenford import chart, fixtures, reproduce as repro
from citebenford.dataset import (
    check_series,
    check_snapshot,
    distribution_from_dict,
    document_kind,
    load_plain_list,
    read_json,
    series_from_dict,
    snapshot_from_dict,
    snapshot_to_distribution,
    span,
    write_plain_list,
)
from citebenford.errors import BenfordError, ValidationError
from citebenford.gof import DEFAULT_ALPHA
from citebenford.models import parse_model
from citebenford.report import RENDERERS, SERIES_RENDERERS, AnalysisReport, analyze, analyze_series
from citebenford.sigdigits import tally
from citebenford.synth import GeneratorSpec, generate, parse_law

EXIT_OK, EXIT_ERROR, EXIT_REJECT = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _bundled(name: str) -> str | None:
    if name.startswith(fixtures.BUNDLED_PREFIX):
        return name[len(fixtures.BUNDLED_PREFIX):]
    return None


def _load_document(source: str) -> dict | None:
    name = _bundled(source)
    if name is not None:
        try:
            return fixtures.raw_document(name)
        except KeyError as exc:
            raise BenfordError(f"{exc.args[0]}; bundled fixtures: {', '.join(fixtures.names())}") from None
    if source.endswith(".json"):
        return read_json(source)
    return None


def build_report(source: str, model_name: str, beta: float | None, base: int, alpha: float) -> AnalysisReport:
    """Load ``source`` (bundled:NAME, JSON snapshot/distribution, or plain list) and test it."""
    model = parse_model(model_name, base, beta)
    warnings: list[str] = []
    sp = None
    doc = _load_document(source)
    if doc is None:
        values, zeros = load_plain_list(source)
        if zeros:
            warnings.append(f"filtered {zeros} uncited (zero) entries")
        if not values:
            raise BenfordError(f"{source}: no positive values to analyze")
        dist = tally(values, base)
        sp = span(values)
        label = source
    else:
        kind = document_kind(doc)
        if kind == "series":
            raise BenfordError(f"{source}: is a series; use the 'series' command")
        if kind == "distribution":
            fx = distribution_from_dict(doc, f"{source}: ")
            dist = fx.distribution
            label = f"{source} ({fx.provenance})" if fx.provenance else source
        else:
            snap = snapshot_from_dict(doc, f"{source}: ")
            errors = check_snapshot(snap)
            if errors:
                raise ValidationError(errors, source)
            dist = snapshot_to_distribution(snap, base)
            if snap.records:
                sp = span(snap.records)
            label = f"{source} ({snap.seed} {snap.label})"
        if dist.N == 0:
            raise BenfordError(f"{source}: no cited records to analyze")
    if dist.base != model.base:
        raise BenfordError(f"{source}: data are base {dist.base} but --base is {model.base}")
    return analyze(dist, model, alpha, label, sp, tuple(warnings))


def cmd_analyze(args) -> int:
    rep = build_report(args.input, args.model, args.beta, args.base, args.alpha)
    _emit(RENDERERS[args.format](rep), args.out)
    return EXIT_OK if rep.gof.conforms else EXIT_REJECT


def cmd_series(args) -> int:
    doc = _load_document(args.input)
    if doc is None:
        raise BenfordError(f"{args.input}: series input must be a JSON series document")
    series = series_from_dict(doc, f"{args.input}: ")
    rep = analyze_series(series, parse_model(args.model, args.base, args.beta), args.alpha, args.strict_nesting)
    _emit(SERIES_RENDERERS[args.format](rep), args.out)
    if rep.errors:
        return EXIT_ERROR
    return EXIT_OK if rep.all_conform else EXIT_REJECT


def cmd_synth(args) -> int:
    law = parse_law(args.law)
    spec = GeneratorSpec(law, args.n, args.base, args.span, args.seed, args.beta if law.value == "zipf" else None)
    values = generate(spec)
    if args.integers:
        # floor keeps the leading digit of any value >= 1
        out = [int(v) for v in values]
    else:
        out = values.tolist()
    if args.out:
        write_plain_list(args.out, out)
    else:
        sys.stdout.write("".join(f"{v!r}\n" if isinstance(v, float) else f"{v}\n" for v in out))
    return EXIT_OK


def cmd_chart(args) -> int:
    rep = build_report(args.input, args.model, args.beta, args.base, args.alpha)
    chart.write_svg(rep, args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    rep = repro.reproduce(args.table, args.alpha)
    text = repro.render_json(rep) if args.format == "json" else repro.render(rep, args.verbose)
    _emit(text, args.out)
    return EXIT_OK if rep.passed else EXIT_REJECT


def cmd_validate(args) -> int:
    doc = _load_document(args.input)
    errors: list[str] = []
    notes: list[str] = []
    if doc is None:
        values, zeros = load_plain_list(args.input)
        summary = f"plain list: {len(values)} positive values, {zeros} zeros"
    else:
        kind = document_kind(doc)
        if kind == "series":
            series = series_from_dict(doc, f"{args.input}: ")
            errors, notes = check_series(series, args.strict_nesting)
            summary = f"{series.kind.value} series of {len(series)} snapshots"
        elif kind == "snapshot":
            snap = snapshot_from_dict(doc, f"{args.input}: ")
            errors = check_snapshot(snap)
            summary = f"snapshot {snap.seed} {snap.label}: N={snap.N}"
        else:
            fx = distribution_from_dict(doc, f"{args.input}: ")
            summary = f"distribution base {fx.distribution.base}, N={fx.distribution.N}"
    lines = [f"{args.input}: {summary}"]
    lines += [f"error: {e}" for e in errors]
    lines += [f"warning: {n}" for n in notes]
    lines.append("invalid" if errors else "valid")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_ERROR if errors else EXIT_OK


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", default="benford", choices=["benford", "uniform", "generalized"])
    p.add_argument("--beta", type=float, help="exponent of the generalized law")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="significance level (default 0.05)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citebenford",
        description="First-significant-digit conformity tests for citation counts.",
        epilog=f"Inputs may name a bundled fixture as bundled:NAME ({', '.join(fixtures.names())}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="test one dataset against a digit law")
    p.add_argument("input", help="plain list, JSON snapshot/distribution, or bundled:NAME")
    _add_model_flags(p)
    p.add_argument("--format", choices=RENDERERS, default="table")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("series", help="test every snapshot of a series")
    p.add_argument("input", help="JSON series document or bundled:table3/4/6/7")
    _add_model_flags(p)
    p.add_argument("--format", choices=SERIES_RENDERERS, default="table")
    p.add_argument("--strict-nesting", action=argparse.BooleanOptionalAction, default=True,
                   help="treat non-nested frozen windows as errors (default) or warnings")
    p.add_argument("--out")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("synth", help="emit a seeded synthetic sample as a plain list")
    p.add_argument("--law", default="benford", help="benford, uniform or zipf")
    p.add_argument("--beta", type=float, default=1.0, help="zipf exponent")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--span", type=int, default=4, help="decades covered")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--integers", action="store_true", help="floor values to integers")
    p.add_argument("--out")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("chart", help="write an SVG bar chart of observed vs model proportions")
    p.add_argument("input")
    _add_model_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("reproduce", help="recompute a published table from bundled data")
    p.add_argument("table", type=int, choices=repro.TABLE_IDS)
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--verbose", "-v", action="store_true", help="list every check")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("validate", help="check a snapshot, series, distribution or plain list")
    p.add_argument("input")
    p.add_argument("--strict-nesting", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"citebenford: invalid input {exc.subject}", file=sys.stderr)
        for e in exc.errors:
            print(f"  {e}", file=sys.stderr)
        return EXIT_ERROR
    except (BenfordError, OSError) as exc:
        print(f"citebenford: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
