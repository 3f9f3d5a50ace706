import numpy as np
import pytest

from pitchgraph.grid import CellAnnotatedAction
from pitchgraph.ingest import ActionRecord, GeoCoordinate
from pitchgraph.snapshots import (
    TimeWindow,
    build_graph,
    build_series,
    generate_windows,
    graph_to_dict,
    series_to_json,
)


def annotated(player, start_s, speed, start_cell, end_cell, duration=2.0):
    record = ActionRecord(
        player_id=player,
        start_time=start_s,
        end_time=start_s + duration,
        start_coord=GeoCoordinate(54.0, -7.0),
        end_coord=GeoCoordinate(54.0, -7.0),
        avg_speed=speed,
        action_label="Running",
        duration=duration,
    )
    return CellAnnotatedAction(record, start_cell, end_cell)


def test_window_counts_paper_setup():
    windows = generate_windows(78, 5, 1)
    assert len(windows) == 74
    assert windows[0] == TimeWindow(0, 5)
    assert windows[-1] == TimeWindow(73, 78)


def test_single_window():
    assert generate_windows(5, 5, 1) == [TimeWindow(0, 5)]


def test_stepped_windows():
    assert generate_windows(10, 5, 2) == [TimeWindow(0, 5), TimeWindow(2, 7), TimeWindow(4, 9)]


def test_width_exceeding_duration_rejected():
    with pytest.raises(ValueError):
        generate_windows(4, 5, 1)
    with pytest.raises(ValueError):
        generate_windows(10, 5, 0)


def test_window_is_half_open():
    w = TimeWindow(0, 5)
    assert w.contains_seconds(0.0)
    assert w.contains_seconds(299.999)
    assert not w.contains_seconds(300.0)
    with pytest.raises(ValueError):
        TimeWindow(5, 5)


def test_merge_two_actions_same_cell_pair():
    acts = [annotated(152, 10.0, 4.0, 3, 5), annotated(9, 20.0, 6.0, 3, 5)]
    g = build_graph(acts, TimeWindow(0, 5))
    assert len(g.edges) == 1
    e = g.edges[0]
    assert (e.from_cell, e.to_cell) == (3, 5)
    assert e.players == frozenset({152, 9})
    assert e.avg_speed == pytest.approx(5.0)
    assert e.action_count == 2
    assert g.nodes == frozenset({3, 5})


def test_membership_by_start_time_only():
    # starts at 0 s and 3 s are inside [0,5) min; 300 s is not
    acts = [annotated(1, 0.0, 2.0, 0, 1), annotated(1, 3.0, 2.0, 1, 2),
            annotated(1, 300.0, 2.0, 2, 3)]
    g = build_graph(acts, TimeWindow(0, 5))
    assert len(g.edges) == 2
    assert g.nodes == frozenset({0, 1, 2})


def test_self_loops_retained():
    g = build_graph([annotated(1, 0.0, 2.0, 4, 4)], TimeWindow(0, 5))
    assert len(g.edges) == 1
    assert g.edges[0].from_cell == g.edges[0].to_cell == 4
    assert g.self_loops() == [g.edges[0]]


def test_empty_window_graph():
    g = build_graph([annotated(1, 600.0, 2.0, 0, 1)], TimeWindow(0, 5))
    assert g.nodes == frozenset() and g.edges == ()


def test_duration_weighted_speed_option():
    acts = [annotated(1, 0.0, 2.0, 0, 1, duration=1.0),
            annotated(2, 1.0, 4.0, 0, 1, duration=3.0)]
    uniform = build_graph(acts, TimeWindow(0, 5))
    weighted = build_graph(acts, TimeWindow(0, 5), speed_weighting="duration")
    assert uniform.edges[0].avg_speed == pytest.approx(3.0)
    assert weighted.edges[0].avg_speed == pytest.approx((2.0 * 1 + 4.0 * 3) / 4)
    with pytest.raises(ValueError):
        build_graph(acts, TimeWindow(0, 5), speed_weighting="median")


def _random_annotated(rng, count, minutes=10.0, cells=12):
    return [
        annotated(
            int(rng.integers(1, 6)),
            float(rng.uniform(0, minutes * 60.0)),
            float(rng.uniform(0.5, 8.0)),
            int(rng.integers(cells)),
            int(rng.integers(cells)),
        )
        for _ in range(count)
    ]


def test_aggregation_conserves_action_counts():
    rng = np.random.default_rng(41)
    acts = _random_annotated(rng, 400)
    for w in generate_windows(10, 5, 1):
        g = build_graph(acts, w)
        contributing = sum(1 for a in acts if w.contains_seconds(a.action.start_time))
        assert sum(e.action_count for e in g.edges) == contributing
        assert len({(e.from_cell, e.to_cell) for e in g.edges}) == len(g.edges)


def test_edge_speed_bounded_by_contributors():
    rng = np.random.default_rng(42)
    acts = _random_annotated(rng, 300)
    w = TimeWindow(0, 5)
    g = build_graph(acts, w)
    for e in g.edges:
        speeds = [
            a.action.avg_speed
            for a in acts
            if w.contains_seconds(a.action.start_time)
            and (a.start_cell, a.end_cell) == (e.from_cell, e.to_cell)
        ]
        assert min(speeds) - 1e-12 <= e.avg_speed <= max(speeds) + 1e-12
        assert len(e.players) <= e.action_count


def test_nodes_are_exactly_active_endpoints():
    rng = np.random.default_rng(43)
    acts = _random_annotated(rng, 200)
    w = TimeWindow(2, 7)
    g = build_graph(acts, w)
    active = set()
    for a in acts:
        if w.contains_seconds(a.action.start_time):
            active.add(a.start_cell)
            active.add(a.end_cell)
    assert g.nodes == frozenset(active)
    for e in g.edges:
        assert e.from_cell in g.nodes and e.to_cell in g.nodes


def test_non_overlapping_windows_partition_actions():
    rng = np.random.default_rng(44)
    acts = _random_annotated(rng, 500, minutes=10.0)
    windows = generate_windows(10, 2, 2)  # step == width
    series = build_series(acts, windows)
    counted = sum(sum(e.action_count for e in g.edges) for g in series)
    in_range = sum(1 for a in acts if a.action.start_time < 10.0 * 60.0)
    assert counted == in_range


def test_overlapping_windows_share_actions():
    rng = np.random.default_rng(45)
    acts = _random_annotated(rng, 300, minutes=8.0)
    series = build_series(acts, generate_windows(8, 5, 1))
    # oracle: re-filter per window independently of build_series
    for g in series:
        keys = {(e.from_cell, e.to_cell) for e in g.edges}
        expected = {
            (a.start_cell, a.end_cell)
            for a in acts
            if g.window.contains_seconds(a.action.start_time)
        }
        assert keys == expected
    assert len(series) == 4


def test_serialization_is_deterministic_and_sorted():
    rng = np.random.default_rng(46)
    acts = _random_annotated(rng, 120)
    windows = generate_windows(8, 5, 1)
    a = series_to_json(build_series(acts, windows))
    b = series_to_json(build_series(list(acts), windows))
    assert a == b
    d = graph_to_dict(build_series(acts, windows).graphs[0])
    assert d["nodes"] == sorted(d["nodes"])
    for e in d["edges"]:
        assert e["players"] == sorted(e["players"])
