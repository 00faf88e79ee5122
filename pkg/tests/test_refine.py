#!/usr/bin/env python
#############################################################
# road_reader/tests/test_refine.py
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
from roadreader.refine import refine_params, refine_graph, overpass_points, witness_points
from roadreader.refine.crossings import find_crossings

from tests import reference


def test_plus_sign_has_one_crossing(plus_graph):
    assert find_crossings(plus_graph) == [((0, 1), (2, 3))]


def test_shared_endpoint_excluded():
    g = road_graph([(0, 0, 0), (1, 10, 0), (2, 10, 10)], [(0, 1), (0, 2)])
    assert find_crossings(g) == []


def test_parallel_segments_match_brute_force():
    rng = np.random.default_rng(2)
    nodes, edges = [], []
    for i, y in enumerate(sorted(rng.choice(500, 50, replace=False))):
        x0 = float(rng.uniform(0, 50))
        nodes += [(2 * i, x0, float(y)), (2 * i + 1, x0 + float(rng.uniform(10, 200)), float(y))]
        edges.append((2 * i, 2 * i + 1))
    g = road_graph(nodes, edges)
    assert find_crossings(g) == []


def test_random_segments_match_brute_force():
    rng = np.random.default_rng(9)
    starts = rng.integers(0, 100, (30, 2))
    pts = np.empty((60, 2), dtype=np.int64)
    pts[0::2] = starts
    pts[1::2] = starts + rng.integers(1, 40, (30, 2))
    g = road_graph([(i, int(x), int(y)) for i, (x, y) in enumerate(pts)],
                   [(2 * i, 2 * i + 1) for i in range(30)])
    expected = []
    for i, (a, b) in enumerate(g.edges):
        for c, d in g.edges[i + 1:]:
            if len({a, b, c, d}) == 4 and reference.crosses(g.position(a), g.position(b),
                                                             g.position(c), g.position(d)):
                expected.append(((a, b), (c, d)))
    assert find_crossings(g) == sorted(expected)


@pytest.mark.parametrize('kwargs', [
    {'tau': 0}, {'step_scale': -1}, {'max_iters': 0}, {'merge_period': 0}, {'tolerance': 0}, {'gamma': -1},
])
def test_refine_params_bounds(kwargs):
    with pytest.raises(ConfigurationError):
        refine_params(**kwargs)


def test_planar_graph_is_a_fixpoint(corner_graph):
    result = refine_graph(corner_graph, refine_params())
    assert result.graph == corner_graph
    assert result.witnesses == []
    assert result.converged
    assert result.iterations == 1


def test_far_crossing_never_moves():
    g = road_graph([(0, 0, 50), (1, 100, 50), (2, 50, 0), (3, 50, 100)], [(0, 1), (2, 3)])
    result = refine_graph(g, refine_params())
    assert result.graph == g
    assert result.converged
    assert result.endpoints == [(0, 1, 2, 3)]


def _replay_single_endpoint(y0, tau, alpha, eps):
    # One endpoint of a vertical road below a horizontal one at y = 0,
    # it slides straight down until it sits tau away.
    y, iterations = y0, 0
    while True:
        iterations += 1
        d = abs(y)
        push = (tau - d) / tau if d < tau else 0.0
        if push <= eps:
            return y, iterations
        y -= alpha


@pytest.mark.parametrize('y0, tau, alpha', [(-5.0, 10.0, 2.0), (-1.0, 10.0, 2.0), (-3.0, 8.0, 1.5)])
def test_close_endpoint_slides_away(y0, tau, alpha):
    g = road_graph([(0, 0, 0), (1, 100, 0), (2, 50, y0), (3, 50, 100)], [(0, 1), (2, 3)])
    p = refine_params(tau=tau, step_scale=alpha)
    result = refine_graph(g, p)

    y, iterations = _replay_single_endpoint(y0, tau, alpha, p.tolerance)
    assert result.graph.position(2) == pytest.approx((50.0, y))
    assert result.iterations == iterations
    assert result.converged
    for n in (0, 1, 3):
        assert result.graph.position(n) == g.position(n)
    assert result.endpoints == [(0, 1, 2, 3)]


def test_step_length_is_alpha():
    g = road_graph([(0, 0, 0), (1, 100, 0), (2, 50, -5), (3, 50, 100)], [(0, 1), (2, 3)])
    one_step = refine_graph(g, refine_params(max_iters=2))
    x, y = one_step.graph.position(2)
    assert np.hypot(x - 50, y + 5) == pytest.approx(4.0)
    assert not one_step.converged


def test_contraction_on_merge_period():
    # 1 sits between two neighbours 2 px apart.
    g = road_graph([(0, 0, 0), (1, 1, 5), (2, 2, 0), (3, 30, 0)], [(0, 1), (1, 2), (2, 3)])
    crossing = road_graph(g.nodes + [(10, 20, -20), (11, 20, 20), (12, 200, 200)],
                          g.edges + [(10, 11)])
    result = refine_graph(crossing, refine_params(merge_period=1))
    assert 1 not in result.graph
    assert result.graph.has_edge(0, 2)


def test_refine_is_deterministic(highway_graph):
    a = refine_graph(highway_graph, refine_params())
    b = refine_graph(highway_graph, refine_params())
    assert a.graph == b.graph and a.witnesses == b.witnesses


def test_overpass_points():
    assert overpass_points(road_graph([(0, 0, 0), (1, 10, 0)], [(0, 1)]), refine_params()) == []
    x = road_graph([(0, 0, 50), (1, 100, 50), (2, 50, 0), (3, 50, 100)], [(0, 1), (2, 3)])
    assert len(overpass_points(x, refine_params())) == 4


def test_highway_over_parallel_roads(highway_graph):
    result = refine_graph(highway_graph, refine_params())
    assert len(result.witnesses) == len(find_crossings(result.graph)) == 2
    points = witness_points(result)
    assert len(points) <= 8
    assert (50.0, 50.0) in points
