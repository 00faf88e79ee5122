#!/usr/bin/env python
#############################################################
# road_reader/gtprep/keypoints.py
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

from roadreader.debug import verbose_log
from roadreader.core.defines import KEYPOINT_ANGLE_MIN, KEYPOINT_ANGLE_MAX
from roadreader.core.geometry import turn_angle

ANGLE_TOL = 1e-9


def is_keypoint(g, nid):
    if g.degree(nid) != 2:
        return True
    a, b = g.neighbors(nid)
    angle = turn_angle(g.position(nid), g.position(a), g.position(b))
    if angle is None:
        return True
    return KEYPOINT_ANGLE_MIN - ANGLE_TOL <= angle <= KEYPOINT_ANGLE_MAX + ANGLE_TOL


def detect_keypoints(g):
    """Nodes that keep their place when a graph is densified

    Arguments:
    Obj:g       -- road_graph.

    Returns:
    Set         -- Ids of nodes with degree != 2 and of degree 2 nodes
                   turning between 60 and 120 degrees inclusive. A
                   degree 2 node sitting on top of a neighbour counts too.
    """
    keypoints = set(nid for nid in g.node_ids if is_keypoint(g, nid))
    verbose_log(detect_keypoints, '%s of %s nodes are keypoints' % (len(keypoints), len(g)))
    return keypoints
