"""Command-line front end.

Subcommands: dim, branch, su3-content, verify, lattice.  Data goes to
stdout (or --output FILE), diagnostics to stderr.  Exit codes: 0 success
and agreement, 1 verified disagreement (would indicate a defect), 2 usage
error.  All numbers are printed in exact decimal; json carries unbounded
quantities as decimal strings.
"""

from __future__ import annotations

import csv
import io
import json

import click

from . import kernels
from .branching import branch_step, su3_content
from .dimensions import (
    DEFAULT_TERM_CAP,
    dim_nested_literal,
    dim_via_eisenstein,
    verify_sweep,
)
from .errors import InvalidLabel, RankTooSmall, TermCapExceeded
from .irrep import IrrepLabel, weyl_dim


def _parse_label(group: int, labels: str, dynkin: bool) -> IrrepLabel:
    try:
        entries = tuple(int(part.strip()) for part in labels.split(","))
    except ValueError:
        raise click.UsageError(f"labels must be comma-separated integers, got {labels!r}")
    try:
        if dynkin:
            return IrrepLabel.from_dynkin(group, entries)
        return IrrepLabel(group, entries)
    except InvalidLabel as exc:
        raise click.UsageError(str(exc))


def _emit(doc: str, output: str | None) -> None:
    if output is None:
        click.echo(doc, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(doc)


def _csv_doc(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_doc(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in [header, *rows]
    ]
    return "\n".join(lines) + "\n"


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "json"]),
    default="text",
    show_default=True,
    help="Output format.",
)
output_option = click.option(
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write output to a file instead of stdout.",
)
group_option = click.option("--group", type=int, required=True, help="The N of SU(N).")
labels_option = click.option(
    "--labels", required=True, help="Comma-separated label entries, e.g. 2,1,2."
)
dynkin_option = click.option(
    "--dynkin",
    is_flag=True,
    help="Interpret --labels as Dynkin labels (entries >= 0).",
)


@click.group()
def main():
    """Exact SU(N) irrep dimensions, branching chains, and lattice checks."""


@main.command(name="dim")
@group_option
@labels_option
@dynkin_option
@click.option(
    "--route",
    type=click.Choice(["weyl", "eisenstein", "literal", "all"]),
    default="all",
    show_default=True,
    help="Which dimension route(s) to evaluate.",
)
@click.option(
    "--term-cap",
    type=int,
    default=DEFAULT_TERM_CAP,
    show_default=True,
    help="Maximum number of terms for the literal route.",
)
@format_option
@output_option
@click.pass_context
def dim_cmd(ctx, group, labels, dynkin, route, term_cap, fmt, output):
    """Dimension of one irrep by the requested route(s)."""
    label = _parse_label(group, labels, dynkin)
    routes = ["weyl", "eisenstein", "literal"] if route == "all" else [route]
    values: dict[str, int] = {}
    for r in routes:
        try:
            if r == "weyl":
                values[r] = weyl_dim(label)
            elif r == "eisenstein":
                values[r] = dim_via_eisenstein(label)
            else:
                values[r] = dim_nested_literal(label, term_cap)
        except RankTooSmall as exc:
            raise click.UsageError(str(exc))
        except TermCapExceeded as exc:
            if route == "all":
                click.echo(f"literal route skipped: {exc}", err=True)
            else:
                raise click.UsageError(str(exc))

    if fmt == "text":
        if len(values) == 1:
            doc = f"{next(iter(values.values()))}\n"
        else:
            doc = "".join(f"{r:<10}  {v}\n" for r, v in values.items())
    elif fmt == "csv":
        doc = _csv_doc(("route", "dimension"), [(r, str(v)) for r, v in values.items()])
    else:
        doc = _json_doc(
            {
                "group": label.n,
                "labels_speiser": list(label.p),
                "dimensions": {r: str(v) for r, v in values.items()},
            }
        )
    _emit(doc, output)
    if len(set(values.values())) > 1:
        click.echo("routes disagree", err=True)
        ctx.exit(1)


@main.command(name="branch")
@group_option
@labels_option
@dynkin_option
@format_option
@output_option
@click.pass_context
def branch_cmd(ctx, group, labels, dynkin, fmt, output):
    """One branching step SU(N) -> SU(N-1) with a conservation check."""
    label = _parse_label(group, labels, dynkin)
    try:
        children = branch_step(label)
    except RankTooSmall as exc:
        raise click.UsageError(str(exc))
    parent_dim = weyl_dim(label)
    rows = [(child, mult, weyl_dim(child)) for child, mult in children.items()]
    child_total = sum(mult * d for _, mult, d in rows)
    conserved = child_total == parent_dim

    if fmt == "text":
        doc = _table(
            ("label", "mult", "dim"),
            [(str(c), str(m), str(d)) for c, m, d in rows],
        )
        doc += f"conservation: {child_total} = {parent_dim} {'ok' if conserved else 'VIOLATED'}\n"
    elif fmt == "csv":
        doc = _csv_doc(
            ("labels", "multiplicity", "dimension"),
            [(",".join(map(str, c.p)), str(m), str(d)) for c, m, d in rows],
        )
    else:
        doc = _json_doc(
            {
                "group": label.n,
                "labels_speiser": list(label.p),
                "children": [
                    {
                        "labels_speiser": list(c.p),
                        "multiplicity": str(m),
                        "dimension": str(d),
                    }
                    for c, m, d in rows
                ],
                "parent_dimension": str(parent_dim),
                "children_dimension_total": str(child_total),
                "conserved": conserved,
            }
        )
    _emit(doc, output)
    if not conserved:
        click.echo("dimension conservation violated", err=True)
        ctx.exit(1)


@main.command(name="su3-content")
@group_option
@labels_option
@dynkin_option
@format_option
@output_option
def su3_content_cmd(group, labels, dynkin, fmt, output):
    """Aggregated SU(3) content of an irrep, with the lattice-route total."""
    label = _parse_label(group, labels, dynkin)
    try:
        content = su3_content(label)
        total = dim_via_eisenstein(label)
    except RankTooSmall as exc:
        raise click.UsageError(str(exc))
    rows = [(leaf, mult, weyl_dim(leaf)) for leaf, mult in content.items()]

    if fmt == "text":
        doc = _table(
            ("label", "mult", "dim"),
            [(str(c), str(m), str(d)) for c, m, d in rows],
        )
        doc += f"eisenstein dimension total: {total}\n"
    elif fmt == "csv":
        doc = _csv_doc(
            ("labels", "multiplicity", "dimension"),
            [(",".join(map(str, c.p)), str(m), str(d)) for c, m, d in rows],
        )
    else:
        doc = _json_doc(
            {
                "group": label.n,
                "labels_speiser": list(label.p),
                "su3_content": [
                    {
                        "labels_speiser": list(c.p),
                        "multiplicity": str(m),
                        "dimension": str(d),
                    }
                    for c, m, d in rows
                ],
                "eisenstein_dimension_total": str(total),
            }
        )
    _emit(doc, output)


@main.command(name="verify")
@group_option
@click.option("--max-label", type=int, required=True, help="Sweep 1 <= P_i <= this.")
@click.option(
    "--term-cap",
    type=int,
    default=DEFAULT_TERM_CAP,
    show_default=True,
    help="Maximum number of terms for the literal route.",
)
@format_option
@output_option
@click.pass_context
def verify_cmd(ctx, group, max_label, term_cap, fmt, output):
    """Sweep all labels up to --max-label and cross-check the three routes."""
    try:
        reports = verify_sweep(group, max_label, term_cap)
    except (RankTooSmall, InvalidLabel) as exc:
        raise click.UsageError(str(exc))
    checked = len(reports)
    agreed = sum(1 for r in reports if r.agree)
    skipped = sum(1 for r in reports if r.literal_skipped)
    summary = f"{checked} checked, {agreed} agreed, {skipped} literal-skipped"

    if fmt == "text":
        doc = _table(
            ("label", "weyl", "eisenstein", "literal", "terms", "agree"),
            [
                (
                    str(r.label),
                    str(r.dim_weyl),
                    str(r.dim_eisenstein),
                    "-" if r.literal_skipped else str(r.dim_literal),
                    str(r.term_count),
                    "yes" if r.agree else "NO",
                )
                for r in reports
            ],
        )
        doc += summary + "\n"
    elif fmt == "csv":
        doc = _csv_doc(
            (
                "labels",
                "dim_weyl",
                "dim_eisenstein",
                "dim_literal",
                "term_count",
                "summation_indices",
                "agree",
            ),
            [
                (
                    ",".join(map(str, r.label.p)),
                    str(r.dim_weyl),
                    str(r.dim_eisenstein),
                    "" if r.literal_skipped else str(r.dim_literal),
                    str(r.term_count),
                    str(r.summation_indices),
                    "true" if r.agree else "false",
                )
                for r in reports
            ],
        )
    else:
        doc = _json_doc(
            {
                "group": group,
                "max_label": max_label,
                "term_cap": term_cap,
                "kernel_backend": kernels.kernel_backend(),
                "reports": [
                    {
                        "labels_speiser": list(r.label.p),
                        "dimensions": {
                            "weyl": str(r.dim_weyl),
                            "eisenstein": str(r.dim_eisenstein),
                            **(
                                {}
                                if r.literal_skipped
                                else {"literal": str(r.dim_literal)}
                            ),
                        },
                        "term_count": str(r.term_count),
                        "summation_indices": r.summation_indices,
                        "agree": r.agree,
                    }
                    for r in reports
                ],
                "summary": {
                    "checked": checked,
                    "agreed": agreed,
                    "literal_skipped": skipped,
                },
            }
        )
    _emit(doc, output)
    if agreed != checked:
        click.echo("disagreement detected", err=True)
        ctx.exit(1)


@main.command(name="lattice")
@click.option("--radius", type=int, required=True, help="Emit points with |a|,|b| <= radius.")
@format_option
@output_option
@click.pass_context
def lattice_cmd(ctx, radius, fmt, output):
    """Lattice numbers N(a,b) on a square window, with the harmonic check.

    The check column holds the six-neighbor sum minus 6*N(a,b) and must be
    zero everywhere.
    """
    if radius < 0:
        raise click.UsageError(f"radius must be >= 0, got {radius}")
    rows = kernels.lattice_harmonic_grid(radius)

    if fmt == "text":
        doc = _table(
            ("a", "b", "n", "check"),
            [(str(a), str(b), str(n), str(c)) for a, b, n, c in rows],
        )
    elif fmt == "csv":
        doc = _csv_doc(
            ("a", "b", "lattice_number", "harmonic_check"),
            [(str(a), str(b), str(n), str(c)) for a, b, n, c in rows],
        )
    else:
        doc = _json_doc(
            {
                "radius": radius,
                "points": [
                    {
                        "a": a,
                        "b": b,
                        "lattice_number": str(n),
                        "harmonic_check": str(c),
                    }
                    for a, b, n, c in rows
                ],
            }
        )
    _emit(doc, output)
    if any(c != 0 for _, _, _, c in rows):
        click.echo("harmonic check failed", err=True)
        ctx.exit(1)


if __name__ == "__main__":
    main()
