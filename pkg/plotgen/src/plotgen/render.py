"""Deterministic rendering of bound-curve CSVs.

Two styles: "fig1" draws the auxiliary exponent function f against the
normalized radius; "fig2" overlays the three rate bounds, labelled (a) for
the ball-covering lower bound, (b) for the improved upper bound, and (c) for
the naive upper bound.  Output format is inferred from the file extension
(.svg or .png).  Rendering is a pure function of the CSV: the SVG id salt is
pinned and no timestamps are embedded, so re-running produces identical bytes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import NamedTuple

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "plotgen"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

EXPECTED_HEADER = ["rho", "f", "lower", "naive_upper", "main_upper"]


class MalformedCurve(ValueError):
    """The CSV does not follow the curve contract."""


class CurvePoint(NamedTuple):
    rho: float
    f: float
    lower: float
    naive_upper: float
    main_upper: float


@dataclass(frozen=True)
class PlotSpec:
    csv_path: str
    style: str  # "fig1" | "fig2"
    output_path: str


def load_curve(path: str) -> list[CurvePoint]:
    """Parse and validate a curve CSV: exact header, floats, rho sorted."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise MalformedCurve(f"cannot read {path}: {exc}") from exc
    if not rows or rows[0] != EXPECTED_HEADER:
        raise MalformedCurve(f"missing or wrong header, expected {','.join(EXPECTED_HEADER)}")
    points = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(EXPECTED_HEADER):
            raise MalformedCurve(f"line {lineno}: expected {len(EXPECTED_HEADER)} fields")
        try:
            points.append(CurvePoint(*(float(x) for x in row)))
        except ValueError as exc:
            raise MalformedCurve(f"line {lineno}: {exc}") from exc
    if not points:
        raise MalformedCurve("curve holds no data rows")
    if any(a.rho > b.rho for a, b in zip(points, points[1:])):
        raise MalformedCurve("rows must be sorted by rho")
    return points


def render(spec: PlotSpec) -> None:
    """Render the curve to spec.output_path; raises MalformedCurve on bad input."""
    if spec.style not in ("fig1", "fig2"):
        raise MalformedCurve(f"unknown style {spec.style!r}")
    fmt = spec.output_path.rsplit(".", 1)[-1].lower()
    if fmt not in ("svg", "png"):
        raise MalformedCurve(f"unsupported output extension .{fmt}")
    points = load_curve(spec.csv_path)
    rho = [p.rho for p in points]

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    try:
        if spec.style == "fig1":
            ax.plot(rho, [p.f for p in points], color="tab:blue")
            ax.set_ylabel(r"$f(\rho)$")
        else:
            ax.plot(rho, [p.lower for p in points], color="tab:blue", label="(a) ball-covering lower bound")
            ax.plot(rho, [p.main_upper for p in points], color="tab:orange", label="(b) improved upper bound")
            ax.plot(rho, [p.naive_upper for p in points], color="tab:green", linestyle="--", label="(c) naive upper bound")
            ax.set_ylabel(r"$\kappa_2(\rho, 2)$")
            ax.legend(loc="upper right")
        ax.set_xlabel(r"$\rho$")
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        fig.savefig(spec.output_path, format=fmt, metadata=_clean_metadata(fmt))
    finally:
        plt.close(fig)


def _clean_metadata(fmt: str) -> dict:
    # Strip run-dependent fields so identical input gives identical bytes.
    if fmt == "svg":
        return {"Date": None}
    return {}
