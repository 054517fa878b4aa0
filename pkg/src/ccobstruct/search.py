"""Parameter-space sweeps over divisor complements with stable, format-agnostic
table output.

Rows are produced in lexicographic (n, d) order regardless of how many worker
processes compute them, so output is bit-identical across worker counts; the
worker count comes from the CCOBSTRUCT_WORKERS environment variable (default:
available parallelism).
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .numtheory import is_prime
from .obstructions import classify
from .rings import ZZ
from .spaces import divisor_complement

WORKERS_ENV_VAR = "CCOBSTRUCT_WORKERS"
CHECK_KEYS = ("gradable", "polarization", "arboreal", "maslov")
_CHECK_TO_REPORT = {
    "gradable": "Gradability",
    "polarization": "Polarization",
    "arboreal": "Arboreal",
}
FORMATS = ("json", "csv", "md")
DEFAULT_PRIMES = (3, 5, 7, 11, 13)


@dataclass(frozen=True)
class SearchSpec:
    """A rectangular (n, d) sweep; ranges are inclusive."""

    n_range: tuple
    d_range: tuple
    primes: tuple = DEFAULT_PRIMES
    checks: tuple = CHECK_KEYS
    anticanonical_only: bool = False
    odd_d_only: bool = False
    fmt: str = "csv"

    def __post_init__(self):
        for label, (lo, hi) in (("n", self.n_range), ("d", self.d_range)):
            if lo > hi:
                raise ValueError(f"empty {label} range {lo}..{hi}")
        if self.n_range[0] < 2:
            raise ValueError("n must be at least 2")
        if self.d_range[0] < 1 and not self.anticanonical_only:
            raise ValueError("d must be at least 1")
        for p in self.primes:
            if p == 2 or not is_prime(p):
                raise ValueError(f"primes must be odd primes, got {p}")
        unknown = set(self.checks) - set(CHECK_KEYS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")

    def columns(self) -> list:
        cols = ["n", "d"]
        for key in ("gradable", "polarization", "arboreal"):
            if key in self.checks:
                cols.append(key)
        if "maslov" in self.checks:
            cols.extend(f"maslov_p{p}" for p in sorted(set(self.primes)))
        return cols

    def cells(self) -> list:
        out = []
        for n in range(self.n_range[0], self.n_range[1] + 1):
            if self.anticanonical_only:
                ds = [n + 1]
            else:
                ds = range(self.d_range[0], self.d_range[1] + 1)
            for d in ds:
                if self.odd_d_only and d % 2 == 0:
                    continue
                out.append((n, d))
        return out


def _classify_cell(args) -> dict:
    n, d, primes, checks = args
    report = classify(divisor_complement(n, d, ZZ), primes)
    row = {"n": n, "d": d}
    for key in ("gradable", "polarization", "arboreal"):
        if key in checks:
            row[key] = report.check(_CHECK_TO_REPORT[key]).verdict.status
    if "maslov" in checks:
        for p in sorted(set(primes)):
            row[f"maslov_p{p}"] = report.check(f"MaslovModP({p})").verdict.status
    return row


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        workers = int(env)
        if workers < 1:
            raise ValueError(f"{WORKERS_ENV_VAR} must be >= 1, got {workers}")
        return workers
    return os.cpu_count() or 1


def search_rows(spec: SearchSpec, workers: int | None = None) -> list:
    """Classify every cell of the sweep; row order is always (n, d) lexicographic."""
    if not spec.checks:
        return []
    if workers is None:
        workers = default_workers()
    jobs = [(n, d, spec.primes, spec.checks) for n, d in spec.cells()]
    if workers <= 1 or len(jobs) < 2:
        return [_classify_cell(job) for job in jobs]
    chunk = max(1, len(jobs) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_classify_cell, jobs, chunksize=chunk))


def render_csv(columns, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])
    return buffer.getvalue()


def render_json(columns, rows) -> str:
    payload = {"schema": "ccobstruct/1", "columns": list(columns), "rows": rows}
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def render_md(columns, rows) -> str:
    lines = ["| " + " | ".join(str(c) for c in columns) + " |",
             "| " + " | ".join("---" for _ in columns) + " |"]
    for row in rows:
        lines.append("| " + " | ".join(str(row[c]) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def render(columns, rows, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(columns, rows)
    if fmt == "json":
        return render_json(columns, rows)
    if fmt == "md":
        return render_md(columns, rows)
    raise ValueError(f"unknown format {fmt!r}")


def run_search(spec: SearchSpec, workers: int | None = None) -> str:
    return render(spec.columns(), search_rows(spec, workers), spec.fmt)
