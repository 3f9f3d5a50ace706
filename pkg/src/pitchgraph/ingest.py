"""Parsing, validation and cleaning of player-action CSV datasets.

The expected input is a comma-separated UTF-8 file with a header row:

    player_id,start_time,end_time,start_lat,start_lon,end_lat,end_lon,speed,action,duration

Each data row describes one movement segment of one player: where it
started and ended (WGS84 degrees), when (seconds from match start), the
average speed over the segment (m/s) and a textual label such as
"Running". Malformed rows and rows violating the record invariants are
collected into a :class:`RejectionReport` instead of raising.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "player_id",
    "start_time",
    "end_time",
    "start_lat",
    "start_lon",
    "end_lat",
    "end_lon",
    "speed",
    "action",
    "duration",
)

# Maximum |duration - (end_time - start_time)| before a row is rejected.
DURATION_TOLERANCE_S = 0.5


class HeaderError(ValueError):
    """Raised when the CSV header is missing or lacks a required column."""


@dataclass(frozen=True)
class GeoCoordinate:
    """A WGS84 position in degrees."""

    lat: float
    lon: float

    def is_valid(self) -> bool:
        return -90.0 <= self.lat <= 90.0 and -180.0 <= self.lon <= 180.0


@dataclass(frozen=True)
class ActionRecord:
    """One movement segment of one player.

    Times are seconds from match start (real-valued; integer in typical
    vendor exports but fractional values are accepted).
    """

    player_id: int
    start_time: float
    end_time: float
    start_coord: GeoCoordinate
    end_coord: GeoCoordinate
    avg_speed: float
    action_label: str
    duration: float
    source_line: int | None = field(default=None, compare=False)

    def invariant_violation(self) -> str | None:
        """Return a reason string if any record invariant fails, else None."""
        if self.start_time < 0:
            return "negative start_time"
        if self.end_time < self.start_time:
            return "negative interval"
        if self.avg_speed < 0:
            return "negative speed"
        if self.duration < 0:
            return "negative duration"
        if abs(self.duration - (self.end_time - self.start_time)) > DURATION_TOLERANCE_S:
            return "duration mismatch"
        if not self.start_coord.is_valid():
            return "start coordinate out of range"
        if not self.end_coord.is_valid():
            return "end coordinate out of range"
        return None


@dataclass
class RejectionReport:
    """Outcome of a parse or validation pass.

    ``accepted_count + len(rejected)`` always equals the number of rows
    that went in. ``rejected`` holds ``(line_number, reason)`` pairs; for
    records without a source line the 1-based record index is used.
    """

    accepted_count: int = 0
    rejected: list[tuple[int, str]] = field(default_factory=list)

    def reject(self, line: int, reason: str) -> None:
        self.rejected.append((line, reason))

    def to_json_obj(self) -> list[dict]:
        return [{"line": line, "reason": reason} for line, reason in self.rejected]


def _parse_row(row: Sequence[str], line: int) -> ActionRecord:
    """Convert one CSV row to a record; ValueError carries the field name."""
    if len(row) != len(CSV_COLUMNS):
        raise ValueError("wrong column count")
    values = [v.strip() for v in row]
    numeric = {}
    for name, raw in zip(
        ("player_id", "start_time", "end_time", "start_lat", "start_lon",
         "end_lat", "end_lon", "avg_speed", "duration"),
        values[:8] + values[9:],
    ):
        try:
            numeric[name] = int(raw) if name == "player_id" else float(raw)
        except ValueError:
            raise ValueError(f"unparseable {name}") from None
    return ActionRecord(
        player_id=numeric["player_id"],
        start_time=numeric["start_time"],
        end_time=numeric["end_time"],
        start_coord=GeoCoordinate(numeric["start_lat"], numeric["start_lon"]),
        end_coord=GeoCoordinate(numeric["end_lat"], numeric["end_lon"]),
        avg_speed=numeric["avg_speed"],
        action_label=values[8],
        duration=numeric["duration"],
        source_line=line,
    )


def parse_actions(source: TextIO | str) -> tuple[list[ActionRecord], RejectionReport]:
    """Parse an action CSV stream into records, in file order.

    Malformed rows (wrong column count, unparseable numbers) are skipped
    and recorded in the report. A missing or renamed header column is a
    fatal :class:`HeaderError` naming the column. Header names are matched
    case-insensitively after trimming.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise HeaderError("missing header row") from None
    seen = [h.strip().lower() for h in header]
    for col in CSV_COLUMNS:
        if col not in seen:
            raise HeaderError(f"missing column: {col}")
    # Tolerate column reordering by mapping positions back to the schema.
    positions = [seen.index(col) for col in CSV_COLUMNS]

    records: list[ActionRecord] = []
    report = RejectionReport()
    for line, row in enumerate(reader, start=2):
        if not row or all(not v.strip() for v in row):
            continue
        try:
            if len(row) != len(header):
                raise ValueError("wrong column count")
            record = _parse_row([row[p] for p in positions], line)
        except ValueError as exc:
            report.reject(line, str(exc))
            continue
        records.append(record)
        report.accepted_count += 1
    return records, report


def validate_and_clean(
    records: Iterable[ActionRecord],
) -> tuple[list[ActionRecord], RejectionReport]:
    """Drop records that violate the record invariants.

    Violations are moved to the report, never raised; output order is
    preserved, so the pass is idempotent. Time-overlapping actions of the
    same player are accepted but logged as warnings (vendor exports are
    known to contain them).
    """
    accepted: list[ActionRecord] = []
    report = RejectionReport()
    last_end: dict[int, float] = {}
    for index, record in enumerate(records, start=1):
        reason = record.invariant_violation()
        line = record.source_line if record.source_line is not None else index
        if reason is not None:
            report.reject(line, reason)
            continue
        prev_end = last_end.get(record.player_id)
        if prev_end is not None and record.start_time < prev_end:
            logger.warning(
                "player %d action at t=%.3fs overlaps previous action ending t=%.3fs",
                record.player_id, record.start_time, prev_end,
            )
        last_end[record.player_id] = max(record.end_time, prev_end or 0.0)
        accepted.append(record)
        report.accepted_count += 1
    return accepted, report


def _format_number(value: float) -> str:
    """Shortest exact decimal form; integers lose the trailing '.0'."""
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def write_actions_csv(records: Iterable[ActionRecord], sink: TextIO) -> None:
    """Serialize records in the canonical CSV schema.

    Numbers are written in shortest round-trip form, so parsing the output
    yields records equal to the input.
    """
    sink.write(",".join(CSV_COLUMNS) + "\n")
    for r in records:
        sink.write(
            ",".join(
                (
                    str(r.player_id),
                    _format_number(r.start_time),
                    _format_number(r.end_time),
                    _format_number(r.start_coord.lat),
                    _format_number(r.start_coord.lon),
                    _format_number(r.end_coord.lat),
                    _format_number(r.end_coord.lon),
                    _format_number(r.avg_speed),
                    r.action_label,
                    _format_number(r.duration),
                )
            )
            + "\n"
        )


def actions_to_csv(records: Iterable[ActionRecord]) -> str:
    buf = io.StringIO()
    write_actions_csv(records, buf)
    return buf.getvalue()
