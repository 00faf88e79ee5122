#!/usr/bin/env python
#############################################################
# road_reader/nms/peaks.py
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

from roadreader.debug import error, verbose_log, ConfigurationError
from roadreader.core.candidates import scored_point
from roadreader.core.defines import SOURCE_ROAD


def candidate_pixels(grid, threshold):
    """Pixels above threshold, best first

    Returns:
    Tuple       -- (xs, ys, scores) arrays sorted by score descending,
                   ties by row then column.
    """
    values = grid.values
    ys, xs = np.nonzero(values > threshold)
    scores = values[ys, xs]
    order = np.lexsort((xs, ys, -scores))
    return xs[order], ys[order], scores[order]


def suppress(xs, ys, scores, radius, source=SOURCE_ROAD):
    """Greedy suppression over pre-sorted candidates

    A candidate survives unless a survivor before it lies closer than
    radius. Survivors are bucketed in a hash grid with cell size radius.
    """
    cells = {}
    kept = []
    r_sq = radius * radius
    for x, y, s in zip(xs.tolist(), ys.tolist(), scores.tolist()):
        cx, cy = int(x // radius), int(y // radius)
        hit = False
        for gx in (cx - 1, cx, cx + 1):
            for gy in (cy - 1, cy, cy + 1):
                for kx, ky in cells.get((gx, gy), ()):
                    if (kx - x) ** 2 + (ky - y) ** 2 < r_sq:
                        hit = True
                        break
                if hit:
                    break
            if hit:
                break
        if not hit:
            kept.append(scored_point(x, y, s, source))
            cells.setdefault((cx, cy), []).append((x, y))
    return kept


def extract_peaks(grid, threshold, radius, source=SOURCE_ROAD):
    """Non-maximum suppression on one mask

    Arguments:
    Obj:grid         -- prob_grid.
    Float:threshold  -- Pixels must score strictly above it.
    Float:radius     -- Suppression radius, pixels.
    Str:source       -- (optional) Mask name stored on the points.

    Returns:
    List             -- scored_point, best first.
    """
    if radius <= 0:
        error(extract_peaks, 'Fatal', 'Radius must be > 0, got %s.' % radius, ConfigurationError)
    xs, ys, scores = candidate_pixels(grid, threshold)
    peaks = suppress(xs, ys, scores, radius, source)
    verbose_log(extract_peaks, '%s %s pixels above %s, %s peaks' % (len(xs), source, threshold, len(peaks)))
    return peaks
