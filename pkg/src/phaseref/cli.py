"""Batch front-end: sweep reference sizes, emit CSV data and SVG figures.

Exit codes: 0 success, 1 configuration error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .fock import ValidationError
from .plotting import render_svg
from .sweep import DEFAULT_SIZES, SweepConfig, run_sweep, write_csv


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes: expected comma-separated integers, got {text!r}")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description=(
            "Simulate the consumption of a bounded phase reference that is "
            "repeatedly used to rotate a vacuum qubit, and record the decay "
            "of its asymmetry and of the achieved fidelity."
        ),
    )
    parser.add_argument(
        "--sizes",
        type=_parse_sizes,
        default=DEFAULT_SIZES,
        help="comma-separated reference cutoffs N (default: 5,10,15,20,25,30)",
    )
    parser.add_argument("--uses", type=int, default=30,
                        help="number of uses per series (default: 30)")
    parser.add_argument("--theta", type=float, default=0.0,
                        help="phase of the reference and target states (default: 0.0)")
    parser.add_argument("--csv", default=None, metavar="PATH",
                        help="write the per-use records as CSV")
    parser.add_argument("--svg-asymmetry", default=None, metavar="PATH",
                        help="write the normalized-asymmetry figure as SVG")
    parser.add_argument("--svg-fidelity", default=None, metavar="PATH",
                        help="write the fidelity figure as SVG")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = SweepConfig(
            sizes=args.sizes,
            uses=args.uses,
            theta=args.theta,
            csv_path=args.csv,
            svg_asymmetry_path=args.svg_asymmetry,
            svg_fidelity_path=args.svg_fidelity,
        )
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    series_list = run_sweep(config)
    try:
        if config.csv_path:
            write_csv(series_list, config.csv_path)
        if config.svg_asymmetry_path:
            render_svg(series_list, "normalized_asymmetry", config.svg_asymmetry_path)
        if config.svg_fidelity_path:
            render_svg(series_list, "fidelity", config.svg_fidelity_path)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
