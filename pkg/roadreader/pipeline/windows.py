#!/usr/bin/env python
#############################################################
# road_reader/pipeline/windows.py
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

from roadreader.debug import error, verbose_log, LayoutError
from roadreader.pipeline import display


class window_layout(object):
    """Square tiles over the canvas

    Attributes:
    Int:window    -- Tile side, pixels.
    Int:grid_n    -- Tiles per axis.
    List:offsets  -- (x0, y0) per tile, rows of tiles top to bottom.
    """

    def __init__(self, window, grid_n, offsets):
        self.__name__ = 'Window_Layout'
        self.window = window
        self.grid_n = grid_n
        self.offsets = list(offsets)

    def __repr__(self):
        return 'Window Layout: %s windows of %s' % (len(self.offsets), self.window)

    def __len__(self):
        return len(self.offsets)

    def display(self, tab=''):
        return display.window_layout(self, tab)

    def interior(self, k, points):
        """Mask of points inside window k, lower edges inclusive."""
        x0, y0 = self.offsets[k]
        points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        return ((points[:, 0] >= x0) & (points[:, 0] < x0 + self.window) &
                (points[:, 1] >= y0) & (points[:, 1] < y0 + self.window))


def axis_offsets(dim, window, grid_n):
    if grid_n == 1:
        return [0]
    return [int(math.floor(k * (dim - window) / (grid_n - 1) + 0.5)) for k in range(grid_n)]


def min_grid(dim, window, d_nei):
    """Fewest windows per axis keeping overlap above d_nei, None if none do."""
    if dim <= window:
        return 1
    if window <= d_nei:
        return None
    return int(math.floor((dim - window) / (window - d_nei))) + 2


def single_window(h, w):
    """One window over the whole canvas."""
    return window_layout(max(h, w), 1, [(0, 0)])


def plan_windows(h, w, window_size, grid_n, d_nei):
    """Evenly spaced sliding windows

    Arguments:
    Int:h,w           -- Canvas size.
    Int:window_size   -- Tile side.
    Int:grid_n        -- Tiles per axis.
    Float:d_nei       -- Overlap between neighbouring tiles must exceed it.

    Returns:
    Obj               -- window_layout with
                         offset_k = round(k * (dim - window) / (grid_n - 1)).
    """
    if window_size > min(h, w):
        error(plan_windows, 'Fatal', 'Window %s larger than canvas %sx%s.' % (window_size, h, w), LayoutError)
    if grid_n < 1:
        error(plan_windows, 'Fatal', 'grid_n must be >= 1.', LayoutError)

    axes = []
    for dim in (h, w):
        offsets = sorted(set(axis_offsets(dim, window_size, grid_n)))
        gaps = np.diff(offsets) if len(offsets) > 1 else np.zeros(0)
        covered = offsets[-1] + window_size >= dim
        if not covered or (len(gaps) and (gaps.max() > window_size or window_size - gaps.max() <= d_nei)):
            need = min_grid(dim, window_size, d_nei)
            hint = 'no grid works, window must exceed d_nei' if need is None else 'minimal feasible grid_n is %s' % need
            error(plan_windows, 'Fatal', '%s windows of %s over %s px leave overlap <= d_nei %s; %s.'
                  % (grid_n, window_size, dim, d_nei, hint), LayoutError)
        axes.append(offsets)

    ys, xs = axes
    layout = window_layout(window_size, grid_n, [(x0, y0) for y0 in ys for x0 in xs])
    verbose_log(plan_windows, '%s windows, offsets x %s y %s' % (len(layout), xs, ys))
    return layout
