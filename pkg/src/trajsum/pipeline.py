"""CSV ingestion, validation, and output writing for the CLI pipeline.

Input format: a CSV with header ``user_id,timestamp,location[,event]``.
Timestamps are epoch seconds or ISO-8601; the event column, when present, is
ignored. Rows are grouped by user and stably sorted by timestamp, so bursts
with equal timestamps keep their input order. Unknown location labels are
auto-registered; malformed rows are counted and skipped unless strict mode
turns them into a hard error.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Sequence

from trajsum.core import LocationSymbol, SymbolicTrajectory, TrajPoint
from trajsum.rle import RleSegment
from trajsum.core import SummaryTrajectory


class DataError(Exception):
    """Input data failed validation."""


_HEADER = ("user_id", "timestamp", "location")

_DELTA_UNITS = {"s": 1.0, "m": 60.0, "h": 3600.0, "d": 86400.0}


def parse_delta(text: str) -> float:
    """Parse a weight threshold with optional unit suffix into seconds.

    Accepts plain seconds ("960"), or a suffix among s/m/h/d ("16m", "0.0111d").
    """
    t = str(text).strip().lower()
    factor = 1.0
    if t and t[-1] in _DELTA_UNITS:
        factor = _DELTA_UNITS[t[-1]]
        t = t[:-1]
    try:
        value = float(t)
    except ValueError:
        raise ValueError(f"cannot parse delta value {text!r}") from None
    if value < 0:
        raise ValueError("delta must be non-negative")
    return value * factor


def parse_timestamp(text: str) -> float:
    """Epoch seconds from a number or an ISO-8601 datetime (naive means UTC)."""
    try:
        return float(text)
    except ValueError:
        pass
    dt = datetime.fromisoformat(text.replace("Z", "+00:00"))
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.timestamp()


@dataclass(frozen=True)
class IngestReport:
    trajectories: list[SymbolicTrajectory]
    n_rows: int
    n_malformed: int


def ingest(path: str | Path, strict: bool = False) -> IngestReport:
    """Load a trajectory dataset from CSV, sorted by user then time."""
    path = Path(path)
    try:
        fh = path.open(newline="")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip().lower() for h in header[:3]) != _HEADER:
            raise DataError(
                f"{path}: expected header user_id,timestamp,location[,event]"
            )
        symbols: dict[str, LocationSymbol] = {}
        per_user: dict[str, list[tuple[float, LocationSymbol]]] = {}
        n_rows = 0
        n_malformed = 0
        for row in reader:
            if not row:
                continue
            n_rows += 1
            if len(row) < 3:
                n_malformed += 1
                continue
            user_id = row[0].strip()
            label = row[2].strip()
            if not user_id or not label:
                n_malformed += 1
                continue
            try:
                ts = parse_timestamp(row[1].strip())
            except ValueError:
                n_malformed += 1
                continue
            sym = symbols.get(label)
            if sym is None:
                sym = symbols[label] = LocationSymbol(label)
            per_user.setdefault(user_id, []).append((ts, sym))
    if strict and n_malformed:
        raise DataError(f"{path}: {n_malformed} malformed row(s) in strict mode")
    trajectories = []
    for user_id in sorted(per_user):
        rows = sorted(per_user[user_id], key=lambda r: r[0])  # stable
        points = tuple(TrajPoint(ts, sym) for ts, sym in rows)
        trajectories.append(SymbolicTrajectory(user_id, points))
    return IngestReport(trajectories, n_rows, n_malformed)


def _fmt(value) -> str:
    # repr round-trips floats exactly, keeping outputs byte-stable; the cast
    # normalizes numpy scalars, whose repr is not a bare literal
    return repr(float(value)) if isinstance(value, float) else str(value)


class OutputDir:
    """Tracks files written by one command so they can be removed on failure."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.written: list[Path] = []

    def register(self, name: str) -> Path:
        path = self.root / name
        self.written.append(path)
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
        path = self.register(name)
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(v) for v in row])
        return path

    def write_json(self, name: str, payload) -> Path:
        path = self.register(name)
        with path.open("w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path

    def write_table(self, name: str, header: Sequence[str], rows: list[Sequence],
                    fmt: str = "csv") -> Path:
        """Write a per-user table as CSV or as a JSON record list."""
        if fmt == "json":
            records = [dict(zip(header, row)) for row in rows]
            return self.write_json(f"{name}.json", records)
        return self.write_csv(f"{name}.csv", header, rows)

    def cleanup(self) -> None:
        for path in self.written:
            path.unlink(missing_ok=True)
        self.written.clear()


def write_trajectories_csv(path: str | Path, dataset: Sequence[SymbolicTrajectory]) -> None:
    """Serialize a dataset in the standard input format (round-trip exact)."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_HEADER)
        for traj in dataset:
            for p in traj.points:
                writer.writerow([traj.user_id, _fmt(p.timestamp), p.location.label])


SUMMARY_HEADER = (
    "user_id", "unit_idx", "t_start", "t_end", "location",
    "occurrences", "weight_seconds", "goodness",
)


def summary_rows(summaries: Sequence[SummaryTrajectory]) -> list[tuple]:
    rows = []
    for summary in summaries:
        for i, u in enumerate(summary.units):
            rows.append(
                (summary.user_id, i, u.start, u.end, u.location.label,
                 u.occurrences, u.weight, u.goodness)
            )
    return rows


def segment_rows(per_user: Sequence[tuple[str, list[RleSegment]]]) -> list[tuple]:
    """Baseline segments in the summary schema; goodness is 1.0 by construction."""
    rows = []
    for user_id, segments in per_user:
        for i, seg in enumerate(segments):
            rows.append(
                (user_id, i, seg.start, seg.end, seg.location.label,
                 seg.count, seg.span, 1.0)
            )
    return rows
