"""Batch sweeps over reference sizes and delimited output.

CSV layout: header ``N,mu,fidelity,asymmetry_bits,normalized_asymmetry,
reference_entropy_bits``, one row per (N, mu) record sorted by N then mu,
LF line endings, UTF-8. The mu = 0 fidelity cell is empty (no operation was
performed, so no fidelity exists). Reals are printed with 12 fractional
digits, switching to scientific notation below 1e-4 so every value
round-trips well under 1e-9.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .fock import ValidationError
from .protocol import DegradationSeries, ProtocolConfig, run_degradation

DEFAULT_SIZES = (5, 10, 15, 20, 25, 30)
CSV_HEADER = (
    "N",
    "mu",
    "fidelity",
    "asymmetry_bits",
    "normalized_asymmetry",
    "reference_entropy_bits",
)


@dataclass(frozen=True)
class SweepConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    uses: int = 30
    theta: float = 0.0
    csv_path: str | None = None
    svg_asymmetry_path: str | None = None
    svg_fidelity_path: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if not self.sizes:
            raise ValidationError("sizes: must be non-empty")
        if any(n < 1 for n in self.sizes):
            raise ValidationError(f"sizes: all cutoffs must be >= 1, got {self.sizes}")
        if self.uses < 1:
            raise ValidationError(f"uses: must be >= 1, got {self.uses}")


def run_sweep(config: SweepConfig) -> list[DegradationSeries]:
    """One degradation series per size, in input order. Fully deterministic."""
    return [
        run_degradation(ProtocolConfig(cutoff_n=n, theta=config.theta, uses=config.uses))
        for n in config.sizes
    ]


def format_real(x: float) -> str:
    if x == 0.0:
        return "0.000000000000"
    if abs(x) < 1e-4:
        return f"{x:.11e}"
    return f"{x:.12f}"


def write_csv(series_list: list[DegradationSeries], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for series in sorted(series_list, key=lambda s: s.config.cutoff_n):
            for rec in series.records:
                writer.writerow(
                    [
                        series.config.cutoff_n,
                        rec.mu,
                        "" if rec.fidelity is None else format_real(rec.fidelity),
                        format_real(rec.asymmetry_bits),
                        format_real(rec.normalized_asymmetry),
                        format_real(rec.reference_entropy_bits),
                    ]
                )


@dataclass
class CsvRow:
    cutoff_n: int
    mu: int
    fidelity: float | None
    asymmetry_bits: float
    normalized_asymmetry: float
    reference_entropy_bits: float


def read_csv(path: str) -> list[CsvRow]:
    """Parse a sweep CSV back into rows (round-trip check support)."""
    rows: list[CsvRow] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise ValidationError(f"unexpected CSV header: {header}")
        for raw in reader:
            rows.append(
                CsvRow(
                    cutoff_n=int(raw[0]),
                    mu=int(raw[1]),
                    fidelity=None if raw[2] == "" else float(raw[2]),
                    asymmetry_bits=float(raw[3]),
                    normalized_asymmetry=float(raw[4]),
                    reference_entropy_bits=float(raw[5]),
                )
            )
    return rows
