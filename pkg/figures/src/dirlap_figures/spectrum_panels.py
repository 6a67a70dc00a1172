"""Four-panel spectrum figure: eigenvalues of the 1-up, 1-down and combined
operators plus the commutator norm, all against the rotation angle.

Usage: dirlap-plot-spectrum --in UP.csv DOWN.csv COMBINED.csv COMMUTATOR.csv
                            [--out BASE]

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

from .schemas import SchemaError, read_commutator, read_spectrum

PANEL_TITLES = ("1-up", "1-down", "combined", "commutator norm")


def derive_base(first_input: str) -> str:
    stem = Path(first_input).stem
    for suffix in ("_1up", "-1up", "_spectrum", "-spectrum"):
        if stem.endswith(suffix):
            stem = stem[: -len(suffix)]
    return str(Path(first_input).with_name(stem + "_panels"))


def render(spectra_paths, commutator_path, base: str) -> list[str]:
    fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
    flat = axes.ravel()
    for ax, path, title in zip(flat[:3], spectra_paths, PANEL_TITLES[:3]):
        for index, (deltas, values) in sorted(read_spectrum(path).items()):
            ax.plot(deltas, values, lw=0.9, label=f"{index}")
        ax.set_title(title)
        ax.set_ylabel("eigenvalue")
    deltas, norms = read_commutator(commutator_path)
    flat[3].plot(deltas, norms, lw=1.1, color="tab:red")
    flat[3].set_title(PANEL_TITLES[3])
    flat[3].set_ylabel("Frobenius norm")
    for ax in flat:
        ax.set_xlabel("rotation angle")
        ax.margins(x=0)
    fig.tight_layout()
    outputs = [f"{base}.png", f"{base}.svg"]
    for out in outputs:
        fig.savefig(out)
    plt.close(fig)
    return outputs


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="dirlap-plot-spectrum", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        "--in",
        dest="inputs",
        nargs=4,
        required=True,
        metavar=("UP", "DOWN", "COMBINED", "COMMUTATOR"),
        help="three spectrum CSVs and one commutator CSV",
    )
    parser.add_argument("--out", help="output base path (extensions are added)")
    args = parser.parse_args(argv)
    base = args.out or derive_base(args.inputs[0])
    try:
        outputs = render(args.inputs[:3], args.inputs[3], base)
    except (SchemaError, OSError) as exc:
        print(f"dirlap-plot-spectrum: error: {exc}", file=sys.stderr)
        return 1
    for out in outputs:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
