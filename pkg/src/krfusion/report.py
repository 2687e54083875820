"""Rendering of decompositions and verification reports (json, csv, text),
plus matplotlib summaries written next to them.

JSON schema ``krfusion.report/1``::

    {"schema": "krfusion.report/1", "all_ok": bool, "reports": [
        {"check": "md" | "xm", "type": "A", "rank": 2, "nu": "(1,1);(2,1)",
         "verdict": bool, "C": "5/4" | null,
         "timings": {side: seconds},
         "sides": {side: [{"mu": "1*w1+0*w2",
                           "poly": [{"exponent": "-1", "coeff": 1}, ...]}, ...]},
         "diff": [{"mu": ..., side: poly-or-null, ...}]}]}

CSV columns are :data:`CSV_COLUMNS`, one row per (report, side, mu, q-exponent).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .groupring import CharacterPoly, LaurentPoly
from .nu import format_nu, parse_nu
from .weight import format_finite, format_rational, format_weight

__all__ = [
    "SCHEMA",
    "CSV_COLUMNS",
    "poly_to_json",
    "decomposition_to_json",
    "character_to_json",
    "report_to_json",
    "emit_report",
    "parse_csv",
    "exit_code",
    "render_figures",
]

SCHEMA = "krfusion.report/1"
CSV_COLUMNS = ("check", "type", "rank", "nu", "side", "mu", "q_exponent", "coeff", "verdict")


def poly_to_json(poly):
    if poly is None:
        return None
    return [{"exponent": format_rational(e), "coeff": c} for e, c in sorted(poly.terms.items())]


def decomposition_to_json(decomp: dict):
    return [{"mu": format_finite(mu), "poly": poly_to_json(p)} for mu, p in decomp.items()]


def character_to_json(f: CharacterPoly):
    return [{"weight": format_weight(k), "coeff": v} for k, v in f.sorted_terms()]


def report_to_json(r):
    side_names = list(r.sides)
    return {
        "check": r.check,
        "type": r.family,
        "rank": r.rank,
        "nu": format_nu(r.nu),
        "verdict": r.verdict,
        "C": None if r.C is None else format_rational(r.C),
        "timings": {k: round(v, 6) for k, v in r.timings.items()},
        "sides": {k: decomposition_to_json(v) for k, v in r.sides.items()},
        "diff": [
            {"mu": format_finite(mu), side_names[0]: poly_to_json(a), side_names[1]: poly_to_json(b)}
            for mu, a, b in r.diff
        ],
    }


def exit_code(reports) -> int:
    return 0 if all(r.verdict for r in reports) else 1


def _csv_rows(reports):
    for r in reports:
        for side, decomp in r.sides.items():
            for mu, poly in decomp.items():
                for e, c in sorted(poly.terms.items()):
                    yield {
                        "check": r.check,
                        "type": r.family,
                        "rank": r.rank,
                        "nu": format_nu(r.nu),
                        "side": side,
                        "mu": format_finite(mu),
                        "q_exponent": format_rational(e),
                        "coeff": c,
                        "verdict": int(r.verdict),
                    }


def _text(reports, timings=True):
    lines = []
    for r in reports:
        status = "PASS" if r.verdict else "FAIL"
        head = f"[{status}] {r.check} {r.family}{r.rank} nu={format_nu(r.nu)}"
        if r.C is not None:
            head += f" C={format_rational(r.C)}"
        if timings:
            head += " (" + ", ".join(f"{k} {v:.3f}s" for k, v in r.timings.items()) + ")"
        lines.append(head)
        first = next(iter(r.sides.values()))
        for mu, poly in first.items():
            lines.append(f"    {format_finite(mu)}: {poly!r}")
        for mu, a, b in r.diff:
            lines.append(f"  ! {format_finite(mu)}: {a!r} != {b!r}")
    ok = sum(r.verdict for r in reports)
    lines.append(f"{ok}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def emit_report(reports, fmt="json", timings=True) -> str:
    """Deterministic rendering; pass ``timings=False`` for byte-stable output."""
    reports = list(reports)
    if fmt == "json":
        doc = {
            "schema": SCHEMA,
            "all_ok": all(r.verdict for r in reports),
            "reports": [report_to_json(r) for r in reports],
        }
        if not timings:
            for item in doc["reports"]:
                item["timings"] = {}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in _csv_rows(reports):
            writer.writerow(row)
        return buf.getvalue()
    if fmt == "text":
        return _text(reports, timings=timings)
    raise ValueError(f"unknown report format {fmt!r}")


def parse_csv(text: str):
    """Read a CSV report back into ``{(check, type, rank, nu): {side: {mu: LaurentPoly}}}``."""
    out = {}
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV columns {reader.fieldnames!r}")
    for row in reader:
        key = (row["check"], row["type"], int(row["rank"]), parse_nu(row["nu"]))
        mu = tuple(int(t.split("*")[0]) for t in row["mu"].split("+"))
        side = out.setdefault(key, {}).setdefault(row["side"], {})
        poly = side.get(mu, LaurentPoly())
        side[mu] = poly + LaurentPoly({Fraction(row["q_exponent"]): int(row["coeff"])})
    return out


def write_report(text: str, path):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def render_figures(reports, outdir):
    """One PNG per report (q-degree profile of every side) and a timing summary.

    Returns the list of written paths.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create figure directory {outdir}: {exc}") from exc
    written = []
    for r in reports:
        fig, axes = plt.subplots(1, len(r.sides), figsize=(4.5 * len(r.sides), 3.5),
                                 sharey=True, squeeze=False)
        for ax, (side, decomp) in zip(axes[0], r.sides.items()):
            for mu, poly in decomp.items():
                xs = [float(e) for e, _ in poly.items()]
                ys = [c for _, c in poly.items()]
                ax.plot(xs, ys, marker="o", linestyle="-", label=format_finite(mu))
            ax.set_title(side)
            ax.set_xlabel("q-exponent")
        axes[0][0].set_ylabel("coefficient")
        if any(r.sides.values()):
            axes[0][-1].legend(fontsize="x-small", loc="best")
        status = "ok" if r.verdict else "MISMATCH"
        fig.suptitle(f"{r.check} {r.family}{r.rank} nu={format_nu(r.nu)} [{status}]", fontsize=9)
        fig.tight_layout()
        name = f"{r.check}_{r.family}{r.rank}_{format_nu(r.nu).replace(';', '_').replace(',', '-')}"
        path = outdir / (name.replace("(", "").replace(")", "") or "empty")
        path = path.with_suffix(".png")
        fig.savefig(path, dpi=100)
        plt.close(fig)
        written.append(path)
    if reports:
        fig, ax = plt.subplots(figsize=(6, 0.35 * len(reports) + 1.5))
        labels = [f"{r.check} {r.family}{r.rank} {format_nu(r.nu)}" for r in reports]
        totals = [sum(r.timings.values()) for r in reports]
        colors = ["tab:green" if r.verdict else "tab:red" for r in reports]
        ax.barh(range(len(reports)), totals, color=colors)
        ax.set_yticks(range(len(reports)))
        ax.set_yticklabels(labels, fontsize=7)
        ax.set_xlabel("seconds")
        fig.tight_layout()
        path = outdir / "timings.png"
        fig.savefig(path, dpi=100)
        plt.close(fig)
        written.append(path)
    return written
