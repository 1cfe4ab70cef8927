# SPDX-License-Identifier: MIT
"""Plain-text rendering of report documents and scan summaries."""

from __future__ import annotations

from typing import Any

from tipgm_padic import parse_expansion


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _root_cell(exact: str, expansion: str) -> str:
    compact = parse_expansion(expansion).compact()
    return f"{exact} = {compact}" if exact else compact


def format_table(headers: list[str], rows: list[list[str]]) -> str:
    """Left-align rows under headers with two spaces between columns."""
    widths = [len(header) for header in headers]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row, strict=True)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths, strict=True)).rstrip()
        for line in [headers, *rows]
    ]
    return "\n".join(lines)


def render_report_table(document: dict[str, Any]) -> str:
    """Render a report document as a per-m table followed by the totals."""
    params = document["params"]
    header = f"p = {params['p']}, q = {params['q']}, k = {params['k']}, theta = {params['theta']}"
    if params.get("theta_precision") is not None:
        header += f" + O({params['p']}^{params['theta_precision']})"

    rows = []
    for entry in document["per_m"]:
        exact_roots = entry.get("exact_roots") or [""] * len(entry["roots"])
        pairs = zip(exact_roots, entry["roots"], strict=True)
        roots = "; ".join(_root_cell(exact, root) for exact, root in pairs)
        rows.append(
            [str(entry["m"]), str(entry["count"]), entry["rule"], str(entry["multiplicity"]), roots]
        )

    lines = [header, "", format_table(["m", "count", "rule", "multiplicity", "roots"], rows), ""]
    lines.append(f"N_TI = {document['n_ti']}")
    lines.append(f"mu_0 bounded: {_yes_no(document['mu0_bounded'])}")
    if "nontrivial_bounded" in document:
        lines.append(f"nontrivial measures bounded: {_yes_no(document['nontrivial_bounded'])}")
    form = document.get("closed_form")
    if form:
        verdict = "agrees" if form["agrees"] else "disagrees"
        lines.append(f"closed form: {form['case']} ({form['kind']}) = {form['value']}, {verdict}")
    return "\n".join(lines)


def summarize(document: dict[str, Any]) -> dict[str, Any]:
    """Reduce a report document to one scan line."""
    form = document.get("closed_form")
    return {
        "p": document["params"]["p"],
        "q": document["params"]["q"],
        "theta": document["params"]["theta"],
        "n_ti": document["n_ti"],
        "mu0_bounded": document["mu0_bounded"],
        "closed_form": form["case"] if form else None,
        "warnings": len(document["warnings"]),
    }


def render_scan_table(summaries: list[dict[str, Any]]) -> str:
    """Render scan summaries, one row per theta; failed points show their error."""
    rows = []
    for summary in summaries:
        if "error" in summary:
            rows.append(
                [str(summary["p"]), str(summary["q"]), summary["theta"], "-", "-", "-",
                 f"error {summary['exit_code']}: {summary['error']}"]
            )
            continue
        rows.append(
            [
                str(summary["p"]),
                str(summary["q"]),
                summary["theta"],
                str(summary["n_ti"]),
                _yes_no(summary["mu0_bounded"]),
                summary["closed_form"] or "-",
                f"{summary['warnings']} warning(s)" if summary["warnings"] else "",
            ]
        )
    return format_table(["p", "q", "theta", "N_TI", "mu_0 bounded", "closed form", "notes"], rows)
