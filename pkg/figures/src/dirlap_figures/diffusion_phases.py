"""Phase-angle trajectories of a diffusion run: both component angles of every
simplex against time, one panel per input trajectory.

Usage: dirlap-plot-diffusion --in TRAJ.csv [TRAJ2.csv ...] [--out BASE]

Writes BASE.png and BASE.svg; the default BASE derives from the first input
file name.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .schemas import SchemaError, read_trajectory


def render(paths, base: str) -> list[str]:
    fig, axes = plt.subplots(1, len(paths), figsize=(5 * len(paths), 4), squeeze=False)
    for ax, path in zip(axes[0], paths):
        series = read_trajectory(path)
        colors = plt.rcParams["axes.prop_cycle"].by_key()["color"]
        for simplex, data in sorted(series.items()):
            color = colors[simplex % len(colors)]
            ax.plot(data["t"], data["theta"], color=color, lw=1.0, label=f"theta {simplex}")
            ax.plot(data["t"], data["phi"], color=color, lw=1.0, ls="--", label=f"phi {simplex}")
        ax.set_title(Path(path).stem)
        ax.set_xlabel("t")
        ax.set_ylabel("phase angle")
        ax.margins(x=0)
        ax.legend(fontsize="x-small", ncol=2)
    fig.tight_layout()
    outputs = [f"{base}.png", f"{base}.svg"]
    for out in outputs:
        fig.savefig(out)
    plt.close(fig)
    return outputs


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="dirlap-plot-diffusion", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        "--in", dest="inputs", nargs="+", required=True, metavar="TRAJECTORY", help="trajectory CSVs"
    )
    parser.add_argument("--out", help="output base path (extensions are added)")
    args = parser.parse_args(argv)
    base = args.out or str(Path(args.inputs[0]).with_suffix("")) + "_phases"
    try:
        outputs = render(args.inputs, base)
    except (SchemaError, OSError) as exc:
        print(f"dirlap-plot-diffusion: error: {exc}", file=sys.stderr)
        return 1
    for out in outputs:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
