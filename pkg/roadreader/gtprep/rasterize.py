#!/usr/bin/env python
#############################################################
# road_reader/gtprep/rasterize.py
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

from roadreader.core.geometry import point_segment_distance
from roadreader.core.grid import prob_grid

TOL = 1e-9


def _bbox(x0, y0, x1, y1, pad, h, w):
    # Pixel index window whose centers may lie within pad of the box.
    c0 = max(0, int(math.floor(min(x0, x1) - pad - 0.5)))
    c1 = min(w, int(math.ceil(max(x0, x1) + pad + 0.5)) + 1)
    r0 = max(0, int(math.floor(min(y0, y1) - pad - 0.5)))
    r1 = min(h, int(math.ceil(max(y0, y1) + pad + 0.5)) + 1)
    return r0, r1, c0, c1


def _centers(r0, r1, c0, c1):
    cols, rows = np.meshgrid(np.arange(c0, c1) + 0.5, np.arange(r0, r1) + 0.5)
    return np.stack([cols, rows], axis=-1)


def rasterize_centerlines(g, h, w, thickness):
    """Binary road mask

    Arguments:
    Obj:g             -- road_graph.
    Int:h,w           -- Canvas size.
    Float:thickness   -- Stroke width, pixels.

    Returns:
    Obj               -- prob_grid, 1 where a pixel center lies within
                         thickness/2 of an edge. Off-canvas parts clip.
    """
    mask = np.zeros((h, w), dtype=bool)
    half = thickness / 2.0
    for a, b in g.edges:
        (ax, ay), (bx, by) = g.position(a), g.position(b)
        r0, r1, c0, c1 = _bbox(ax, ay, bx, by, half, h, w)
        if r0 >= r1 or c0 >= c1:
            continue
        dist = point_segment_distance(_centers(r0, r1, c0, c1), (ax, ay), (bx, by))
        mask[r0:r1, c0:c1] |= dist <= half + TOL
    return prob_grid(mask.astype(np.float64))


def rasterize_disks(points, radius, h, w):
    """Binary disk mask, used for keypoints and overpass points

    A pixel is set when its center is within radius of a point or when
    it contains the point, so radius 0 marks the containing pixel.
    """
    mask = np.zeros((h, w), dtype=bool)
    for px, py in points:
        r0, r1, c0, c1 = _bbox(px, py, px, py, radius, h, w)
        if r0 < r1 and c0 < c1:
            centers = _centers(r0, r1, c0, c1)
            dist = np.hypot(centers[..., 0] - px, centers[..., 1] - py)
            mask[r0:r1, c0:c1] |= dist <= radius + TOL
        col, row = int(math.floor(px)), int(math.floor(py))
        if 0 <= row < h and 0 <= col < w:
            mask[row, col] = True
    return prob_grid(mask.astype(np.float64))
