#!/usr/bin/env python
#############################################################
# road_reader/graphs/euclid.py
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
from scipy.spatial import cKDTree

from roadreader.debug import error, log, ConfigurationError
from roadreader.core.graph import road_graph


def neighbor_pairs(points, d_nei):
    """Index pairs (i < j) at distance <= d_nei, sorted."""
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if len(points) < 2:
        return np.zeros((0, 2), dtype=np.int64)
    pairs = cKDTree(points).query_pairs(d_nei, output_type='ndarray')
    if len(pairs) == 0:
        return np.zeros((0, 2), dtype=np.int64)
    pairs = np.sort(pairs, axis=1)
    return pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]


def build_euclidean_graph(vertices, d_nei):
    """Candidate graph over extracted vertices

    Arguments:
    List:vertices   -- (x, y) per vertex, the list index is the node id.
    Float:d_nei     -- Neighbourhood radius, inclusive.

    Returns:
    Obj             -- road_graph with an edge for every pair within d_nei.
    """
    if d_nei <= 0:
        error(build_euclidean_graph, 'Fatal', 'd_nei must be > 0.', ConfigurationError)
    points = [(float(x), float(y)) for x, y in vertices]
    pairs = neighbor_pairs(points, d_nei)
    log(build_euclidean_graph, '%s vertices, %s candidate edges' % (len(points), len(pairs)))
    return road_graph([(i, x, y) for i, (x, y) in enumerate(points)], pairs.tolist())
