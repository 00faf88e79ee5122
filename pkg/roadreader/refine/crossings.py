#!/usr/bin/env python
#############################################################
# road_reader/refine/crossings.py
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

from shapely import STRtree, LineString

from roadreader.debug import verbose_log
from roadreader.core.geometry import segments_intersect


def find_crossings(g):
    """Edge pairs whose segments properly cross without sharing a node

    Arguments:
    Obj:g       -- road_graph.

    Returns:
    List        -- ((a, b), (c, d)) with (a, b) < (c, d), sorted.
    """
    edges = g.edges
    if len(edges) < 2:
        return []

    segments = [(g.position(a), g.position(b)) for a, b in edges]
    tree = STRtree([LineString(s) for s in segments])
    left, right = tree.query(tree.geometries)

    crossings = []
    for i, j in zip(left.tolist(), right.tolist()):
        if i >= j:
            continue
        (a, b), (c, d) = edges[i], edges[j]
        if len({a, b, c, d}) < 4:
            continue
        if segments_intersect(segments[i][0], segments[i][1], segments[j][0], segments[j][1]):
            crossings.append((edges[i], edges[j]))

    crossings.sort()
    verbose_log(find_crossings, '%s crossings over %s edges' % (len(crossings), len(edges)))
    return crossings
