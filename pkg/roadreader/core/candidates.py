#!/usr/bin/env python
#############################################################
# road_reader/core/candidates.py
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

from roadreader.debug import error, ValidationError
from roadreader.core import display
from roadreader.core.defines import SOURCE_ROAD, SOURCE_LIST
from roadreader.core.graph import road_graph


class scored_point(object):
    """Vertex pulled out of a mask

    Attributes:
    Int:x,y      -- Pixel column and row.
    Float:score  -- Mask value at the pixel.
    Str:source   -- Mask name, see defines.SOURCE_LIST.
    """

    def __init__(self, x, y, score, source=SOURCE_ROAD):
        self.__name__ = 'Scored_Point'
        if not 0.0 <= score <= 1.0:
            error(self, 'Fatal', 'Score %s outside [0,1].' % score, ValidationError)
        if source not in SOURCE_LIST:
            error(self, 'Fatal', 'Unknown source %r.' % source, ValidationError)
        self.x = x
        self.y = y
        self.score = float(score)
        self.source = source

    def __repr__(self):
        return 'Scored Point: (%s, %s) %.4f %s' % (self.x, self.y, self.score, self.source)

    def __eq__(self, other):
        if not isinstance(other, scored_point):
            return NotImplemented
        return (self.x, self.y, self.score, self.source) == (other.x, other.y, other.score, other.source)

    def __hash__(self):
        return hash((self.x, self.y, self.score, self.source))

    def _get_xy(self):
        return (self.x, self.y)
    xy = property(_get_xy)


class candidate_set(object):
    """Vertices plus candidate edges within d_nei

    Arguments:
    List:vertices -- (id, x, y) tuples, positions unique.
    List:pairs    -- (id, id) candidate edges.
    Float:d_nei   -- Neighbourhood radius every pair respects.
    List:labels   -- (optional) 0/1 per pair.
    List:probs    -- (optional) Probability per pair.
    """

    def __init__(self, vertices, pairs, d_nei, labels=None, probs=None):
        self.__name__ = 'Candidate_Set'
        self.d_nei = float(d_nei)
        self._vertices = [(int(v[0]), float(v[1]), float(v[2])) for v in vertices]
        self._index = {}
        seen = set()
        for i, (vid, x, y) in enumerate(self._vertices):
            if vid in self._index:
                error(self, 'Fatal', 'Duplicate vertex id %s.' % vid, ValidationError)
            if (x, y) in seen:
                error(self, 'Fatal', 'Duplicate vertex position (%s, %s).' % (x, y), ValidationError)
            self._index[vid] = i
            seen.add((x, y))

        self._pairs = [(int(a), int(b)) for a, b in pairs]
        for a, b in self._pairs:
            if a not in self._index or b not in self._index or a == b:
                error(self, 'Fatal', 'Bad pair (%s, %s).' % (a, b), ValidationError)
            (ax, ay), (bx, by) = self.position(a), self.position(b)
            if math.hypot(bx - ax, by - ay) > self.d_nei + 1e-9:
                error(self, 'Fatal', 'Pair (%s, %s) longer than d_nei %s.' % (a, b, self.d_nei), ValidationError)

        self.labels = self._aligned('labels', labels)
        if self.labels is not None and any(l not in (0, 1) for l in self.labels):
            error(self, 'Fatal', 'Labels must be 0 or 1.', ValidationError)
        self.probs = self._aligned('probs', probs)
        if self.probs is not None and any(not 0.0 <= p <= 1.0 for p in self.probs):
            error(self, 'Fatal', 'Probabilities outside [0,1].', ValidationError)

    def _aligned(self, name, values):
        if values is None:
            return None
        values = list(values)
        if len(values) != len(self._pairs):
            error(self, 'Fatal', '%s has %s entries for %s pairs.' % (name, len(values), len(self._pairs)), ValidationError)
        return values

    def __repr__(self):
        return 'Candidate Set: %s vertices, %s pairs' % (len(self._vertices), len(self._pairs))

    def __len__(self):
        return len(self._pairs)

    def display(self, tab=''):
        return display.candidate_set(self, tab)

    def _get_vertices(self):
        return list(self._vertices)
    vertices = property(_get_vertices)

    def _get_pairs(self):
        return list(self._pairs)
    pairs = property(_get_pairs)

    def position(self, vid):
        _, x, y = self._vertices[self._index[vid]]
        return (x, y)

    def pair_positions(self):
        """(n_pairs, 2, 2) array of endpoint positions."""
        if not self._pairs:
            return np.zeros((0, 2, 2))
        return np.array([[self.position(a), self.position(b)] for a, b in self._pairs])

    def with_probs(self, probs):
        return candidate_set(self._vertices, self._pairs, self.d_nei, self.labels, probs)

    def to_graph(self):
        return road_graph(self._vertices, self._pairs)
