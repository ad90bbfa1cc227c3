"""Report generator: sweep table plus rendered figures.

Runs a velocity sweep of the dispersion branches for a fixed medium, writes
the rows as CSV and renders the companion figures (branch frequencies and
Cherenkov cone opening) as PNG files next to it.  The plot-free ``medmap``
subcommands remain the machine interface; this tool is the human one.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .cli import render_csv, sweep_rows
from .medium import MediumSpec


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="medmap-report", description=__doc__)
    parser.add_argument("--medium-n", type=float, default=1.5, help="refractive index")
    parser.add_argument("--medium-mu", type=float, default=1.0, help="relative permeability")
    parser.add_argument("--vmax", type=float, default=0.95, help="largest medium speed in the sweep")
    parser.add_argument("--steps", type=int, default=240, help="number of sweep points")
    parser.add_argument("--kvec", type=str, default="1,0,0", help="spatial wave vector kx,ky,kz")
    parser.add_argument("--outdir", type=str, default="medmap_report", help="output directory")
    return parser


def _figure_branches(values, rows, n: float, path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(values, [r["k_a"] for r in rows], label="upper branch", lw=1.5)
    ax.plot(values, [r["k_b"] for r in rows], label="lower branch", lw=1.5)
    ax.axhline(0.0, color="k", lw=0.6)
    threshold = 1.0 / n
    if values[0] <= threshold <= values[-1]:
        ax.axvline(threshold, color="gray", ls="--", lw=0.8, label="phase-speed threshold")
    ax.set_xlabel("medium speed v (units of c)")
    ax.set_ylabel("branch frequency")
    ax.set_title(f"dispersion branches, n = {n:g}")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def _figure_cone(values, rows, n: float, path: Path) -> None:
    angles = [r["cone_angle_rad"] if r["cone_angle_rad"] is not None else np.nan for r in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(values, angles, lw=1.5, color="tab:red")
    ax.set_xlabel("medium speed v (units of c)")
    ax.set_ylabel("cone half-angle (rad)")
    ax.set_title(f"negative-branch cone opening, n = {n:g}")
    ax.grid(alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        medium = MediumSpec(n=args.medium_n, mu=args.medium_mu, velocity=(0.0, 0.0, 0.0))
        kvec = tuple(float(p) for p in args.kvec.split(","))
        if args.steps < 2:
            raise ValueError("need at least two sweep points")
        if not 0.0 < args.vmax < 1.0:
            raise ValueError("vmax must lie in (0, 1)")
        values = np.linspace(0.0, args.vmax, args.steps)
        rows = sweep_rows(medium, "v", values, kvec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "sweep.csv"
    csv_path.write_text(render_csv({"rows": rows}), encoding="utf-8")
    _figure_branches(values, rows, medium.n, outdir / "branches.png")
    _figure_cone(values, rows, medium.n, outdir / "cone_angle.png")
    for name in ("sweep.csv", "branches.png", "cone_angle.png"):
        print(outdir / name)
    return 0


if __name__ == "__main__":
    sys.exit(main())
