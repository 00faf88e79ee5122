#!/usr/bin/env python
#############################################################
# road_reader/nms/__init__.py
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

from roadreader import settings
from roadreader.debug import error, log, ConfigurationError
from roadreader.core.defines import SOURCE_KEYPOINT, SOURCE_OVERPASS, SOURCE_ROAD
from roadreader.nms.peaks import candidate_pixels, suppress, extract_peaks


class nms_params(object):
    """Vertex extraction settings

    Attributes:
    Float:t_k   -- Keypoint and overpass threshold.
    Float:t_r   -- Road threshold.
    Float:d_k   -- Keypoint suppression radius.
    Float:d_r   -- Road suppression radius.
    """

    def __init__(self, t_k=None, t_r=None, d_k=None, d_r=None):
        self.__name__ = 'NMS_Params'
        self.t_k = settings.keypoint_threshold if t_k is None else t_k
        self.t_r = settings.road_threshold if t_r is None else t_r
        self.d_k = settings.keypoint_radius if d_k is None else d_k
        self.d_r = settings.road_radius if d_r is None else d_r
        self._check_errors()

    def __repr__(self):
        return 'NMS Params'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _check_errors(self):
        for name in ('t_k', 't_r'):
            if not 0.0 < getattr(self, name) < 1.0:
                error(self, 'Fatal', '%s must be in (0,1).' % name, ConfigurationError)
        for name in ('d_k', 'd_r'):
            if getattr(self, name) <= 0:
                error(self, 'Fatal', '%s must be > 0.' % name, ConfigurationError)


def coupled_nms(bundle, p):
    """Vertices of all three masks

    Arguments:
    Obj:bundle  -- mask_bundle.
    Obj:p       -- nms_params.

    Returns:
    List        -- scored_point: keypoint peaks, then overpass peaks not
                   already taken, then road peaks.

    Keypoint and overpass masks are suppressed at d_k. Road pixels
    closer than d_r to any of those vertices are dropped before the road
    mask is suppressed at d_r.
    """
    keypoints = extract_peaks(bundle.keypoint, p.t_k, p.d_k, SOURCE_KEYPOINT)
    taken = set(v.xy for v in keypoints)
    overpass = [v for v in extract_peaks(bundle.overpass, p.t_k, p.d_k, SOURCE_OVERPASS)
                if v.xy not in taken]
    priority = keypoints + overpass

    xs, ys, scores = candidate_pixels(bundle.road, p.t_r)
    if priority and len(xs):
        tree = cKDTree([v.xy for v in priority])
        dist, _ = tree.query(np.column_stack((xs, ys)), k=1)
        free = dist >= p.d_r
        xs, ys, scores = xs[free], ys[free], scores[free]
    roads = suppress(xs, ys, scores, p.d_r, SOURCE_ROAD)

    log(coupled_nms, '%s keypoint, %s overpass, %s road vertices' % (len(keypoints), len(overpass), len(roads)))
    return priority + roads
