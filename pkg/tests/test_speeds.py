import numpy as np
import pytest

from pitchgraph.analytics import community_speed_summary, louvain
from pitchgraph.analytics.communities import Partition
from pitchgraph.snapshots import TimeWindow

from helpers import make_graph, random_edge_map


def partition_for(g, mapping):
    return Partition(window=g.window, assignment=mapping, modularity=0.0)


def test_quartiles_use_linear_interpolation():
    # speeds 2.4, 3.6, 4.9 leaving one community
    g = make_graph({(0, 1): 2.4, (0, 2): 3.6, (0, 3): 4.9})
    p = partition_for(g, {0: 0, 1: 0, 2: 0, 3: 0})
    (s,) = community_speed_summary(g, p)
    assert s.q1 == pytest.approx(3.0)
    assert s.mean == pytest.approx(3.6333, abs=1e-3)
    assert s.q3 == pytest.approx(4.25)
    assert s.minimum == 2.4 and s.maximum == 4.9
    assert s.edge_count == 3


def test_single_edge_all_stats_equal():
    g = make_graph({(0, 1): 5.0})
    p = partition_for(g, {0: 0, 1: 1})
    s0, s1 = community_speed_summary(g, p)
    assert s0.minimum == s0.q1 == s0.mean == s0.q3 == s0.maximum == 5.0
    assert s1.edge_count == 0
    assert s1.minimum is s1.q1 is s1.mean is s1.q3 is s1.maximum is None


def test_edges_grouped_by_origin_community_with_self_loops():
    g = make_graph({(0, 1): 2.0, (1, 0): 4.0, (1, 1): 6.0})
    p = partition_for(g, {0: 0, 1: 1})
    s0, s1 = community_speed_summary(g, p)
    assert s0.edge_count == 1 and s0.mean == pytest.approx(2.0)
    assert s1.edge_count == 2 and s1.mean == pytest.approx(5.0)


def test_partition_must_cover_graph():
    g = make_graph({(0, 1): 2.0})
    with pytest.raises(ValueError, match="cover"):
        community_speed_summary(g, partition_for(g, {0: 0}))


def test_summary_order_and_invariants_on_random_graphs():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(2, 15))
        g = make_graph(random_edge_map(rng, n, 0.3, speeds=None, self_loops=True),
                       nodes=range(n))
        part = louvain(g, seed=0)
        summaries = community_speed_summary(g, part)
        assert [s.community_id for s in summaries] == sorted(
            set(part.assignment.values())
        )
        assert sum(s.edge_count for s in summaries) == len(g.edges)
        for s in summaries:
            if s.edge_count == 0:
                assert s.mean is None
                continue
            assert s.minimum <= s.q1 <= s.q3 <= s.maximum
            assert s.minimum <= s.mean <= s.maximum
