#!/usr/bin/env python3
"""Render figures from the solver's CSV output.

Two kinds are supported:
  fig1 - scatter of the least admissible c against a + b, with the
         identity line c = a + b for reference (pairs CSV).
  fig2 - the diagonal ratio series r(n, n) = c(n, n) / 2n against n, with
         horizontal references at 1 and 9/8 (diagonal CSV).

This script never recomputes number theory; it only consumes CSV files, so
the solver library and its test suite run fully without it.
"""

import argparse
import sys
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "render-fig"  # deterministic SVG ids

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

SCHEMAS = {
    "fig1": ("a", "b", "sum", "c", "r_num", "r_den", "r_dec"),
    "fig2": ("n", "c", "r_num", "r_den", "r_dec"),
}
IMAGE_SUFFIXES = (".png", ".svg")


class SchemaError(ValueError):
    """The input CSV does not match the schema for the requested kind."""


def load_rows(path: str, kind: str) -> list:
    """Read and validate the CSV; exact header match, uniform field counts."""
    header = SCHEMAS[kind]
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise SchemaError(f"{path}: empty file")
    if tuple(lines[0].split(",")) != header:
        raise SchemaError(
            f"{path}: header {lines[0]!r} does not match the {kind} schema "
            f"{','.join(header)!r}"
        )
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != len(header):
            raise SchemaError(f"{path}: line {i}: expected {len(header)} fields")
        rows.append(parts)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def _draw_fig1(rows, ax) -> int:
    sums = [int(r[2]) for r in rows]
    cs = [int(r[3]) for r in rows]
    ax.scatter(sums, cs, s=4, linewidths=0, alpha=0.5, color="tab:blue")
    lo, hi = min(sums), max(sums)
    ax.plot([lo, hi], [lo, hi], color="tab:red", linewidth=1.0, label="c = a + b")
    ax.set_xlabel("a + b")
    ax.set_ylabel("least admissible c")
    ax.legend(loc="upper left")
    return len(cs)


def _draw_fig2(rows, ax) -> int:
    ns = [int(r[0]) for r in rows]
    ratios = [float(Fraction(int(r[2]), int(r[3]))) for r in rows]
    ax.plot(ns, ratios, linewidth=0.8, color="tab:blue", label="r(n, n)")
    ax.axhline(1.0, color="tab:green", linewidth=1.0, label="r = 1")
    ax.axhline(9 / 8, color="tab:red", linewidth=1.0, label="r = 9/8")
    ax.set_xlabel("n")
    ax.set_ylabel("r(n, n) = c(n, n) / 2n")
    ax.legend(loc="lower right")
    return len(ns)


_DRAWERS = {"fig1": _draw_fig1, "fig2": _draw_fig2}


def render(kind: str, in_path: str, out_path: str, dpi: int = 150) -> int:
    """Render one figure to out_path; returns the number of plotted rows.

    Output is deterministic for fixed input and dpi: no dates or other
    run-dependent metadata are embedded.
    """
    if not out_path.endswith(IMAGE_SUFFIXES):
        raise SchemaError(f"{out_path}: output must end in one of {IMAGE_SUFFIXES}")
    rows = load_rows(in_path, kind)
    fig, ax = plt.subplots(figsize=(7, 5))
    try:
        count = _DRAWERS[kind](rows, ax)
        metadata = {"Date": None} if out_path.endswith(".svg") else None
        fig.savefig(out_path, dpi=dpi, metadata=metadata)
    finally:
        plt.close(fig)
    return count


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_fig.py",
        description="Render the pair scatter (fig1) or diagonal ratio series "
        "(fig2) from solver CSV output.",
    )
    parser.add_argument("--kind", choices=sorted(SCHEMAS), required=True)
    parser.add_argument("--in", dest="in_path", required=True, metavar="CSV")
    parser.add_argument("--out", required=True, metavar="IMAGE", help="png or svg")
    parser.add_argument("--dpi", type=int, default=150)
    args = parser.parse_args(argv)
    if args.dpi < 1:
        print("error: --dpi must be positive", file=sys.stderr)
        return 2
    try:
        count = render(args.kind, args.in_path, args.out, dpi=args.dpi)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"plotted {count} row(s) to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
