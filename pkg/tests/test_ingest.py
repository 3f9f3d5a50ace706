import io
import logging

import pytest

from pitchgraph.ingest import (
    ActionRecord,
    GeoCoordinate,
    HeaderError,
    actions_to_csv,
    parse_actions,
    validate_and_clean,
)

HEADER = "player_id,start_time,end_time,start_lat,start_lon,end_lat,end_lon,speed,action,duration"

SAMPLE = f"""{HEADER}
152,0,4,54.123,-7.357,54.224,-7.351,5.36,Running,4
152,3,5,54.224,-7.351,54.011,-7.391,3.97,Jogging,2
152,5,10,54.011,-7.391,54.349,-7.650,4.98,Running,5
152,10,16,54.349,-7.650,54.012,-7.655,3.83,Jogging,6
152,16,20,54.012,-7.655,54.020,-7.657,4.51,Running,4
"""


def test_parse_sample_first_row():
    records, report = parse_actions(SAMPLE)
    assert len(records) == 5
    assert report.accepted_count == 5 and report.rejected == []
    first = records[0]
    assert first.player_id == 152
    assert first.start_time == 0.0
    assert first.end_time == 4.0
    assert first.start_coord == GeoCoordinate(54.123, -7.357)
    assert first.end_coord == GeoCoordinate(54.224, -7.351)
    assert first.avg_speed == 5.36
    assert first.action_label == "Running"
    assert first.duration == 4.0


def test_empty_file_with_header():
    records, report = parse_actions(HEADER + "\n")
    assert records == []
    assert report.accepted_count == 0
    assert report.rejected == []


def test_unparseable_speed_skips_row_only():
    text = f"{HEADER}\n1,0,4,54.0,-7.0,54.0,-7.0,fast,Running,4\n2,0,4,54.0,-7.0,54.0,-7.0,3.0,Running,4\n"
    records, report = parse_actions(text)
    assert len(records) == 1 and records[0].player_id == 2
    assert report.rejected == [(2, "unparseable avg_speed")]


def test_wrong_column_count_rejected():
    text = f"{HEADER}\n1,0,4,54.0,-7.0\n"
    records, report = parse_actions(text)
    assert records == []
    assert report.rejected == [(2, "wrong column count")]


def test_missing_header_column_is_fatal():
    bad = HEADER.replace("speed", "velocity")
    with pytest.raises(HeaderError, match="speed"):
        parse_actions(bad + "\n1,0,4,54.0,-7.0,54.0,-7.0,3.0,Running,4\n")


def test_no_header_at_all():
    with pytest.raises(HeaderError):
        parse_actions("")


def test_headers_matched_case_insensitively():
    text = SAMPLE.replace(HEADER, HEADER.upper().replace(",", " ,"))
    records, _ = parse_actions(text)
    assert len(records) == 5


def test_reordered_columns():
    text = (
        "speed,player_id,start_time,end_time,start_lat,start_lon,end_lat,end_lon,action,duration\n"
        "5.36,152,0,4,54.123,-7.357,54.224,-7.351,Running,4\n"
    )
    records, _ = parse_actions(text)
    assert records[0].avg_speed == 5.36 and records[0].player_id == 152


def test_round_trip_stability():
    records, _ = parse_actions(SAMPLE)
    text = actions_to_csv(records)
    again, report = parse_actions(text)
    assert again == records
    assert report.rejected == []
    assert actions_to_csv(again) == text


def _record(**overrides):
    base = dict(
        player_id=1,
        start_time=0.0,
        end_time=4.0,
        start_coord=GeoCoordinate(54.0, -7.0),
        end_coord=GeoCoordinate(54.001, -7.001),
        avg_speed=3.0,
        action_label="Running",
        duration=4.0,
    )
    base.update(overrides)
    return ActionRecord(**base)


@pytest.mark.parametrize(
    "overrides,reason",
    [
        (dict(end_time=-1.0, duration=0.0), "negative interval"),
        (dict(avg_speed=-1.0), "negative speed"),
        (dict(start_time=-2.0, end_time=2.0), "negative start_time"),
        (dict(duration=5.0), "duration mismatch"),
        (dict(end_time=0.0, duration=-0.2), "negative duration"),
        (dict(start_coord=GeoCoordinate(95.0, 0.0)), "start coordinate out of range"),
        (dict(end_coord=GeoCoordinate(0.0, 190.0)), "end coordinate out of range"),
    ],
)
def test_validation_rejects_invariant_violations(overrides, reason):
    good = _record()
    bad = _record(**overrides)
    kept, report = validate_and_clean([good, bad])
    assert kept == [good]
    assert report.accepted_count == 1
    assert report.rejected == [(2, reason)]


def test_duration_within_tolerance_accepted():
    kept, report = validate_and_clean([_record(duration=4.4)])
    assert len(kept) == 1 and not report.rejected


def test_validation_counts_add_up_and_is_idempotent():
    records, _ = parse_actions(SAMPLE)
    mixed = records + [_record(avg_speed=-3.0), _record(duration=9.0)]
    kept, report = validate_and_clean(mixed)
    assert report.accepted_count + len(report.rejected) == len(mixed)
    again, report2 = validate_and_clean(kept)
    assert again == kept
    assert report2.rejected == []


def test_sample_rows_all_pass_validation():
    records, _ = parse_actions(SAMPLE)
    kept, report = validate_and_clean(records)
    assert len(kept) == 5 and report.rejected == []


def test_overlap_logs_warning_but_keeps_row(caplog):
    records, _ = parse_actions(SAMPLE)
    with caplog.at_level(logging.WARNING, logger="pitchgraph.ingest"):
        kept, report = validate_and_clean(records)
    assert len(kept) == 5
    assert any("overlaps" in message for message in caplog.messages)


def test_rejection_report_json_shape():
    _, report = parse_actions(f"{HEADER}\n1,0,4,54.0,-7.0,54.0,-7.0,x,Running,4\n")
    assert report.to_json_obj() == [{"line": 2, "reason": "unparseable avg_speed"}]


def test_parse_accepts_file_object():
    records, _ = parse_actions(io.StringIO(SAMPLE))
    assert len(records) == 5
