#!/usr/bin/env python
#############################################################
# road_reader/core/geometry.py
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
import numpy as np

from roadreader.core.defines import GEOM_EPS


def cross(o, a, b):
    """Z component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def segments_intersect(p1, p2, p3, p4, eps=GEOM_EPS):
    """Proper crossing test for segments p1-p2 and p3-p4.

    Arguments:
    Tuple:p1,p2   -- First segment endpoints.
    Tuple:p3,p4   -- Second segment endpoints.
    Float:eps     -- Cross products within eps of zero count as zero.

    Returns:
    Bool          -- True only if each segment strictly separates the
                     other's endpoints. Touching, shared endpoints and
                     collinear overlap are not crossings.
    """
    d1 = cross(p3, p4, p1)
    d2 = cross(p3, p4, p2)
    d3 = cross(p1, p2, p3)
    d4 = cross(p1, p2, p4)
    return (((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and
            ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)))


def intersection_point(p1, p2, p3, p4):
    """Intersection of the lines through p1-p2 and p3-p4, None if parallel."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = p4[0] - p3[0], p4[1] - p3[1]
    denom = rx * sy - ry * sx
    if abs(denom) <= GEOM_EPS:
        return None
    t = ((p3[0] - p1[0]) * sy - (p3[1] - p1[1]) * sx) / denom
    return (p1[0] + t * rx, p1[1] + t * ry)


def point_segment_distance(points, a, b):
    """Vectorised distance of an (N, 2) array of points to segment a-b."""
    points = np.asarray(points, dtype=np.float64)
    a = np.asarray(a, dtype=np.float64)
    d = np.asarray(b, dtype=np.float64) - a
    seg_sq = float(d @ d)
    rel = points - a
    if seg_sq == 0:
        return np.hypot(rel[..., 0], rel[..., 1])
    t = np.clip((rel @ d) / seg_sq, 0.0, 1.0)
    off = rel - t[..., None] * d
    return np.hypot(off[..., 0], off[..., 1])


def turn_angle(center, a, b):
    """Angle in degrees between center->a and center->b.

    Returns None when either direction has zero length.
    """
    ux, uy = a[0] - center[0], a[1] - center[1]
    vx, vy = b[0] - center[0], b[1] - center[1]
    nu = math.hypot(ux, uy)
    nv = math.hypot(vx, vy)
    if nu == 0 or nv == 0:
        return None
    c = (ux * vx + uy * vy) / (nu * nv)
    return math.degrees(math.acos(min(1.0, max(-1.0, c))))


def polyline_length(points):
    points = np.asarray(points, dtype=np.float64)
    if len(points) < 2:
        return 0.0
    steps = np.diff(points, axis=0)
    return float(np.hypot(steps[:, 0], steps[:, 1]).sum())


def point_along(points, distances):
    """Positions at the given arc lengths along a polyline.

    Arguments:
    Array:points     -- (N, 2) polyline vertices, N >= 2.
    List:distances   -- Arc lengths from the first vertex.

    Returns:
    Array            -- (len(distances), 2) positions; arc lengths past
                        the end clamp to the last vertex.
    """
    points = np.asarray(points, dtype=np.float64)
    steps = np.diff(points, axis=0)
    seg_len = np.hypot(steps[:, 0], steps[:, 1])
    cum = np.concatenate([[0.0], np.cumsum(seg_len)])
    distances = np.clip(np.asarray(distances, dtype=np.float64), 0.0, cum[-1])
    xs = np.interp(distances, cum, points[:, 0])
    ys = np.interp(distances, cum, points[:, 1])
    return np.stack([xs, ys], axis=-1)


def angle_difference(a, b):
    """Difference in degrees between two undirected directions."""
    diff = abs(a - b) % 180.0
    return min(diff, 180.0 - diff)


def nearest_on_segments(points, starts, ends, chunk=512):
    """Closest segment for each point

    Arguments:
    Array:points   -- (N, 2) query points.
    Array:starts   -- (M, 2) segment starts, M >= 1.
    Array:ends     -- (M, 2) segment ends.
    Int:chunk      -- Points handled per broadcast.

    Returns:
    Tuple          -- (index, t, dist) arrays of length N. Ties go to
                      the lowest segment index.
    """
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    starts = np.asarray(starts, dtype=np.float64).reshape(-1, 2)
    d = np.asarray(ends, dtype=np.float64).reshape(-1, 2) - starts
    if len(points) > chunk:
        parts = [nearest_on_segments(points[k:k + chunk], starts, starts + d, chunk)
                 for k in range(0, len(points), chunk)]
        return tuple(np.concatenate(col) for col in zip(*parts))
    seg_sq = np.einsum('ij,ij->i', d, d)
    rel = points[:, None, :] - starts[None, :, :]
    safe = np.where(seg_sq > 0, seg_sq, 1.0)
    t = np.where(seg_sq > 0, np.clip(np.einsum('nmj,mj->nm', rel, d) / safe, 0.0, 1.0), 0.0)
    off = rel - t[..., None] * d[None, :, :]
    dist = np.hypot(off[..., 0], off[..., 1])
    index = np.argmin(dist, axis=1)
    rows = np.arange(len(points))
    return index, t[rows, index], dist[rows, index]


def direction(a, b):
    """Undirected heading of a-b in degrees, [0, 180)."""
    return math.degrees(math.atan2(b[1] - a[1], b[0] - a[0])) % 180.0
