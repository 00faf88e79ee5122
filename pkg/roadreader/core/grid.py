#!/usr/bin/env python
#############################################################
# road_reader/core/grid.py
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

from roadreader.debug import error, ValidationError
from roadreader.core import display


class prob_grid(object):
    """H x W scalar field in [0,1]

    Arguments:
    Array:values  -- 2-D array, row-major, rows are y.

    Attributes:
    Int:height    -- Rows.
    Int:width     -- Columns.
    Array:values  -- float64 copy, read only.
    """

    def __init__(self, values):
        self.__name__ = 'Prob_Grid'
        values = np.array(values, dtype=np.float64)
        if values.ndim != 2 or 0 in values.shape:
            error(self, 'Fatal', 'Grid must be a non-empty 2-D array, got shape %s.' % (values.shape,), ValidationError)
        if not np.all(np.isfinite(values)) or values.min() < 0.0 or values.max() > 1.0:
            error(self, 'Fatal', 'Grid values outside [0,1].', ValidationError)
        values.setflags(write=False)
        self._values = values

    def __repr__(self):
        return 'Prob Grid: %sx%s' % (self.height, self.width)

    def display(self, tab=''):
        return display.prob_grid(self, tab)

    def _get_values(self):
        return self._values
    values = property(_get_values)

    def _get_height(self):
        return self._values.shape[0]
    height = property(_get_height)

    def _get_width(self):
        return self._values.shape[1]
    width = property(_get_width)

    def _get_shape(self):
        return self._values.shape
    shape = property(_get_shape)

    @classmethod
    def zeros(cls, h, w):
        return cls(np.zeros((h, w)))


class feature_grid(object):
    """(H/16) x (W/16) x D feature map

    Arguments:
    Array:values  -- 3-D array (gh, gw, depth), channel fastest.
    """

    def __init__(self, values):
        self.__name__ = 'Feature_Grid'
        values = np.array(values, dtype=np.float64)
        if values.ndim != 3 or 0 in values.shape:
            error(self, 'Fatal', 'Feature grid must be a non-empty 3-D array, got shape %s.' % (values.shape,), ValidationError)
        if not np.all(np.isfinite(values)):
            error(self, 'Fatal', 'Feature grid holds non-finite values.', ValidationError)
        values.setflags(write=False)
        self._values = values

    def __repr__(self):
        return 'Feature Grid: %sx%sx%s' % (self.gh, self.gw, self.depth)

    def display(self, tab=''):
        return display.feature_grid(self, tab)

    def _get_values(self):
        return self._values
    values = property(_get_values)

    def _get_gh(self):
        return self._values.shape[0]
    gh = property(_get_gh)

    def _get_gw(self):
        return self._values.shape[1]
    gw = property(_get_gw)

    def _get_depth(self):
        return self._values.shape[2]
    depth = property(_get_depth)


def constant_features(gh, gw, depth, value=0.0):
    """Pseudo feature map, every cell holds the same value."""
    return feature_grid(np.full((gh, gw, depth), float(value)))


class mask_bundle(object):
    """Road, keypoint and overpass masks of one scene."""

    def __init__(self, road, keypoint, overpass):
        self.__name__ = 'Mask_Bundle'
        if not (road.shape == keypoint.shape == overpass.shape):
            error(self, 'Fatal', 'Mask sizes differ: road %s keypoint %s overpass %s.'
                  % (road.shape, keypoint.shape, overpass.shape), ValidationError)
        self.road = road
        self.keypoint = keypoint
        self.overpass = overpass

    def __repr__(self):
        return 'Mask Bundle: %sx%s' % self.shape

    def __iter__(self):
        yield 'road', self.road
        yield 'keypoint', self.keypoint
        yield 'overpass', self.overpass

    def _get_shape(self):
        return self.road.shape
    shape = property(_get_shape)

    def display(self, tab=''):
        return display.mask_bundle(self, tab)
