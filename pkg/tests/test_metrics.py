#!/usr/bin/env python
#############################################################
# road_reader/tests/test_metrics.py
# (c) 2026 road-reader developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#############################################################

import numpy as np
import pytest

from roadreader.debug import ConfigurationError
from roadreader.core.graph import road_graph
from roadreader.metrics.apls import apls_params, apls, inject_controls, snap_controls, path_cost, directional_cost
from roadreader.metrics.topo import topo_params, topo, seed_points, match_samples


@pytest.fixture
def lattice():
    # 3 x 3 lattice with 100 px edges.
    nodes = [(3 * r + c, 50 + 100 * c, 50 + 100 * r) for r in range(3) for c in range(3)]
    edges = [(3 * r + c, 3 * r + c + 1) for r in range(3) for c in range(2)]
    edges += [(3 * r + c, 3 * (r + 1) + c) for r in range(2) for c in range(3)]
    return road_graph(nodes, edges)


@pytest.fixture
def missing_edge():
    gt = road_graph([(0, 0, 0), (1, 100, 0), (2, 200, 0)], [(0, 1), (1, 2)])
    prop = road_graph([(0, 0, 0), (1, 100, 0), (2, 200, 0)], [(0, 1)])
    return gt, prop


def _random_planar(seed, size=5, spacing=80.0, keep=0.7):
    # Jittered lattice with a random subset of its edges, so no two edges cross.
    rng = np.random.default_rng(seed)
    jitter = rng.uniform(-15, 15, (size * size, 2))
    nodes = [(size * r + c, 40 + spacing * c + jitter[size * r + c, 0], 40 + spacing * r + jitter[size * r + c, 1])
             for r in range(size) for c in range(size)]
    edges = [(size * r + c, size * r + c + 1) for r in range(size) for c in range(size - 1)]
    edges += [(size * r + c, size * (r + 1) + c) for r in range(size - 1) for c in range(size)]
    edges = [e for e, k in zip(edges, rng.random(len(edges)) < keep) if k]
    used = set(n for e in edges for n in e)
    return road_graph([n for n in nodes if n[0] in used], edges)


def _path(xs, y=0.0, jitter=None):
    nodes = [(i, float(x), y) for i, x in enumerate(xs)]
    if jitter is not None:
        nodes = [(i, x + dx, y + dy) for (i, x, y), (dx, dy) in zip(nodes, jitter)]
    return road_graph(nodes, [(i, i + 1) for i in range(len(xs) - 1)])


@pytest.mark.parametrize('kwargs', [{'seed_interval': 0}, {'angle_threshold': 120}, {'matching': 'lucky'}])
def test_topo_params_bounds(kwargs):
    with pytest.raises(ConfigurationError):
        topo_params(**kwargs)


def test_topo_self_match(lattice):
    result = topo(lattice, lattice)
    assert tuple(result) == pytest.approx((1.0, 1.0, 1.0))
    assert all(d['located'] for d in result.seeds)


def test_topo_empty_cases(lattice):
    assert tuple(topo(road_graph(), road_graph())) == (1.0, 1.0, 1.0)
    assert tuple(topo(lattice, road_graph([(0, 0, 0)]))) == (0.0, 0.0, 0.0)


def test_topo_missing_component():
    gt = road_graph([(0, 0, 0), (1, 200, 0), (2, 0, 500), (3, 200, 500)], [(0, 1), (2, 3)])
    prop = road_graph([(0, 0, 0), (1, 200, 0)], [(0, 1)])
    precision, recall, f1 = topo(gt, prop)
    assert precision == pytest.approx(1.0)
    assert recall == pytest.approx(0.5)
    assert f1 == pytest.approx(2 / 3)


def test_topo_shifted_proposal(lattice):
    moved = road_graph([(n, x, y + 16) for n, x, y in lattice.nodes], lattice.edges)
    assert tuple(topo(lattice, moved)) == (0.0, 0.0, 0.0)


def test_topo_optimal_matching_agrees_on_self(lattice):
    result = topo(lattice, lattice, topo_params(matching='optimal'))
    assert tuple(result) == pytest.approx((1.0, 1.0, 1.0))


def test_seed_points_along_chains():
    seeds = seed_points(_path([0, 100, 200]), 50)
    assert [x for x, _ in seeds] == pytest.approx([25, 75, 125, 175])


def test_match_samples():
    gt = [(0, 0, 0.0), (5, 0, 0.0), (10, 0, 90.0)]
    prop = [(1, 0, 0.0), (4, 0, 0.0), (10, 1, 0.0)]
    # The last pair is close but crosses at 90 degrees.
    assert match_samples(gt, prop, 2, 30) == 2
    assert match_samples(gt, prop, 2, 30, 'optimal') == 2
    assert match_samples(gt, [], 2, 30) == 0


def test_optimal_matching_beats_greedy():
    gt = [(0, 0, 0.0), (2, 0, 0.0)]
    prop = [(1.2, 0, 0.0), (3.5, 0, 0.0)]
    assert match_samples(gt, prop, 2, 30) == 1
    assert match_samples(gt, prop, 2, 30, 'optimal') == 2


def test_topo_recall_never_grows_when_edges_drop():
    gt = _path([0, 100, 200, 300, 400])
    recalls = []
    for k in range(4):
        prop = road_graph(gt.nodes, gt.edges[:4 - k])
        recalls.append(topo(gt, prop).recall)
    assert recalls == sorted(recalls, reverse=True)
    assert recalls[0] == pytest.approx(1.0)


@pytest.mark.parametrize('kwargs', [{'control_interval': 0}, {'snap_radius': -1}])
def test_apls_params_bounds(kwargs):
    with pytest.raises(ConfigurationError):
        apls_params(**kwargs)


def test_apls_self_match(lattice):
    assert apls(lattice, lattice).score == pytest.approx(1.0)


@pytest.mark.parametrize('seed', range(50))
def test_self_match_on_random_planar_graphs(seed):
    g = _random_planar(seed)
    assert apls(g, g).score == pytest.approx(1.0)
    assert tuple(topo(g, g)) == pytest.approx((1.0, 1.0, 1.0))


def test_apls_empty_cases(lattice):
    assert apls(road_graph(), road_graph()).score == 1.0
    assert apls(lattice, road_graph()).score == 0.0
    assert apls(road_graph(), lattice).score == 0.0


def test_inject_controls():
    g = inject_controls(_path([0, 100, 200]), 50)
    assert sorted(x for _, x, _ in g.nodes) == [0, 50, 100, 150, 200]
    assert g.node_ids == [0, 1, 2, 3, 4]
    assert g.number_of_edges() == 4


def test_snap_controls():
    g = _path([0, 100])
    snapped, snaps = snap_controls([(0, 3), (40, -5), (100, 1), (50, 40)], g, 25)
    assert snaps[0] == 0 and snaps[2] == 1 and snaps[3] is None
    assert snapped.position(snaps[1]) == pytest.approx((40.0, 0.0))
    assert snapped.number_of_edges() == 2

    lone = road_graph([(0, 0, 0), (1, 100, 0), (7, 300, 0)], [(0, 1)])
    _, snaps = snap_controls([(305, 0), (320, 30)], lone, 25)
    assert snaps == [7, None]


def test_path_cost():
    assert path_cost(100, 100) == 0.0
    assert path_cost(100, 150) == 0.5
    assert path_cost(100, 400) == 1.0
    assert path_cost(100, None) == 1.0


def test_apls_missing_edge(missing_edge):
    gt, prop = missing_edge
    p = apls_params(50, 25)
    forward, pairs, unsnapped = directional_cost(gt, prop, p)
    # Controls A B C at 0 100 200 plus 50 and 150. The 150 control has
    # nothing within 25 px, C only snaps to the isolated node.
    assert pairs == 10
    assert unsnapped == 1
    assert forward == pytest.approx(0.7)
    assert directional_cost(prop, gt, p)[0] == 0.0
    result = apls(gt, prop, p)
    assert result.score == pytest.approx(0.65)
    assert dict(result)['apls_gt_to_prop'] == pytest.approx(0.7)


def test_apls_is_symmetric(missing_edge):
    gt, prop = missing_edge
    assert apls(gt, prop).score == apls(prop, gt).score


def test_apls_perturbed_nodes():
    rng = np.random.default_rng(13)
    xs = [0, 70, 140, 210, 280]
    gt = _path(xs, 20.0)
    prop = _path(xs, 20.0, rng.uniform(-0.25, 0.25, (5, 2)))
    assert apls(gt, prop).score >= 0.98


def test_apls_drops_with_edges():
    gt = _path([0, 100, 200, 300, 400])
    scores = [apls(gt, road_graph(gt.nodes, gt.edges[:4 - k])).score for k in range(4)]
    assert scores == sorted(scores, reverse=True)
    assert all(0.0 <= s <= 1.0 for s in scores)
