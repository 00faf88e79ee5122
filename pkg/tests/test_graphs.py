#!/usr/bin/env python
#############################################################
# road_reader/tests/test_graphs.py
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

import math
from itertools import combinations
import numpy as np
import networkx as nx
import pytest

from roadreader.debug import CapacityError, ConfigurationError
from roadreader.core.graph import road_graph
from roadreader.graphs.euclid import neighbor_pairs, build_euclidean_graph
from roadreader.graphs.line import line_graph
from roadreader.graphs.components import count_special_components
from roadreader.graphs.iso import (from_networkx, isomorphic, set_isomorphic, orbit_colors, atlas_graphs,
                                   whitney_check, is_triangle, is_star, is_paw, edge_orbit_violations,
                                   edge_orbit_check, prism_witness, prism_separation)


def _nx(nxg):
    return from_networkx(nxg)


def test_euclidean_graph_example():
    g = build_euclidean_graph([(0, 0), (0, 50), (0, 120)], 64)
    assert g.edges == [(0, 1)]


@pytest.mark.parametrize('vertices', [[], [(3, 3)]])
def test_euclidean_graph_tiny(vertices):
    assert build_euclidean_graph(vertices, 64).number_of_edges() == 0


def test_euclidean_graph_rejects_radius():
    with pytest.raises(ConfigurationError):
        build_euclidean_graph([(0, 0)], 0)


def test_neighbor_pairs_match_brute_force():
    rng = np.random.default_rng(4)
    points = rng.uniform(0, 1024, (500, 2))
    expected = [(i, j) for i, j in combinations(range(500), 2)
                if math.dist(points[i], points[j]) <= 64]
    assert [tuple(p) for p in neighbor_pairs(points, 64).tolist()] == expected


def test_line_graph_path(chain_graph):
    lg = line_graph(chain_graph)
    assert lg.line_nodes == [(0, 1), (1, 2)]
    assert lg.line_edges == [(0, 1)]


def test_line_graph_of_triangle_and_star():
    k3 = line_graph(_nx(nx.complete_graph(3))).to_graph()
    k13 = line_graph(_nx(nx.star_graph(3))).to_graph()
    assert is_triangle(k3)
    assert is_triangle(k13)


def test_line_graph_of_five_star_is_k5():
    lg = line_graph(_nx(nx.star_graph(5)))
    assert len(lg.line_edges) == 10
    assert isomorphic(lg.to_graph(), _nx(nx.complete_graph(5)))


def test_line_graph_edge_count_identity():
    rng = np.random.default_rng(8)
    for k in range(1000):
        n = int(rng.integers(2, 16))
        nxg = nx.gnp_random_graph(n, float(rng.uniform(0.1, 0.6)), seed=k)
        g = _nx(nxg)
        lg = line_graph(g)
        assert len(lg) == g.number_of_edges()
        assert len(lg.line_edges) == sum(math.comb(g.degree(v), 2) for v in g.node_ids)


def test_line_graph_midpoints_and_permutation(corner_graph):
    lg = line_graph(corner_graph)
    assert lg.to_graph(corner_graph).position(1) == (45.0, 0.0)
    flipped = lg.with_features(np.arange(3)[:, None]).permuted([2, 1, 0])
    assert flipped.line_nodes == [(2, 3), (1, 2), (0, 1)]
    assert flipped.line_edges == [(0, 1), (1, 2)]
    assert flipped.features[:, 0].tolist() == [2, 1, 0]


def test_message_edges_sorted_by_destination(chain_graph):
    dst, src = line_graph(chain_graph).message_edges()
    assert list(zip(dst.tolist(), src.tolist())) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    dst, src = line_graph(chain_graph).message_edges(self_loops=False)
    assert list(zip(dst.tolist(), src.tolist())) == [(0, 1), (1, 0)]


def test_count_special_components():
    assert count_special_components(_nx(nx.complete_graph(3))) == (1, 0)
    assert count_special_components(_nx(nx.star_graph(3))) == (0, 1)
    paw = nx.complete_graph(3)
    paw.add_edge(2, 3)
    assert count_special_components(_nx(paw)) == (0, 0)
    mixed = nx.disjoint_union_all([nx.complete_graph(3), nx.star_graph(3), nx.star_graph(3), nx.path_graph(4)])
    assert count_special_components(_nx(mixed)) == (1, 2)


def test_set_isomorphic_identity_and_reflection():
    g = road_graph([(1, 0, 0), (3, 1, 0), (2, 2, 0)], [(1, 3), (3, 2)])
    assert set_isomorphic(g, {1}, {1})
    assert set_isomorphic(g, {1}, {2})
    assert not set_isomorphic(g, {1}, {3})
    assert not set_isomorphic(g, {1}, {1, 3})


def test_set_isomorphic_cap():
    with pytest.raises(CapacityError):
        set_isomorphic(_nx(nx.path_graph(11)), {0}, {10})
    assert set_isomorphic(_nx(nx.path_graph(11)), {0}, {10}, cap=11)


def test_orbit_colors():
    assert set(orbit_colors(_nx(nx.cycle_graph(6))).values()) == {0}
    assert orbit_colors(_nx(nx.path_graph(3))) == {0: 0, 1: 1, 2: 0}


def test_prism_orbits():
    g, tri, rung = prism_witness()
    assert set(orbit_colors(g).values()) == {0}
    line_colors = orbit_colors(line_graph(g).to_graph(g))
    assert len(set(line_colors.values())) == 2
    for a, b in combinations(g.node_ids, 2):
        assert set_isomorphic(g, {a}, {b})
    assert not set_isomorphic(g, tri, rung)


def test_prism_separation():
    assert prism_separation() == (True, False, False)


def test_atlas_cap():
    assert len(atlas_graphs(4)) == 1 + 1 + 2 + 6
    with pytest.raises(CapacityError):
        atlas_graphs(8)


def test_whitney_exception_is_only_triangle_and_star():
    pairs = whitney_check(6)
    assert len(pairs) == 1
    g1, g2 = pairs[0]
    assert {is_triangle(g1), is_triangle(g2)} == {True, False}
    assert is_star(g1) or is_star(g2)


def test_edge_orbits_match_except_paw():
    failures = edge_orbit_check(6)
    assert failures
    assert all(is_paw(g) for g, _ in failures)


def test_paw_violation():
    paw = nx.complete_graph(3)
    paw.add_edge(2, 3)
    assert edge_orbit_violations(_nx(paw)) == [((0, 1), (2, 3))]
    assert edge_orbit_violations(_nx(nx.cycle_graph(5))) == []
