#!/usr/bin/env python
#############################################################
# road_reader/pipeline/fuse.py
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

def edge_key(p1, p2):
    """Canonical key of an edge: its endpoint positions, sorted."""
    p1, p2 = tuple(p1), tuple(p2)
    return (p1, p2) if p1 <= p2 else (p2, p1)


def fuse_predictions(per_window):
    """Average the probabilities every window gave an edge

    Arguments:
    List:per_window  -- (edge key, prob) entries, in window order.

    Returns:
    Dict             -- Edge key to arithmetic mean.
    """
    sums = {}
    counts = {}
    for key, prob in per_window:
        sums[key] = sums.get(key, 0.0) + float(prob)
        counts[key] = counts.get(key, 0) + 1
    return dict((key, sums[key] / counts[key]) for key in sums)
