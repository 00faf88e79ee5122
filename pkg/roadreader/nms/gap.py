#!/usr/bin/env python
#############################################################
# road_reader/nms/gap.py
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

from roadreader.debug import error, DomainError, ConfigurationError


class gap_config(object):
    """Road-gap geometry around a missed vertex

    Attributes:
    Float:d_k, d_r   -- Suppression radii.
    Tuple:deltas     -- (dd1, dd2, dd3, dd4) slack distances.
    """

    def __init__(self, d_k, d_r, deltas):
        self.__name__ = 'Gap_Config'
        self.d_k = float(d_k)
        self.d_r = float(d_r)
        self.deltas = tuple(float(d) for d in deltas)
        self._check_errors()

    def __repr__(self):
        return 'Gap Config'

    def _check_errors(self):
        if len(self.deltas) != 4:
            error(self, 'Fatal', 'Need four deltas, got %s.' % len(self.deltas), ConfigurationError)
        if self.d_k < 0 or self.d_r < 0 or min(self.deltas) < 0:
            error(self, 'Fatal', 'Radii and deltas must be nonnegative.', ConfigurationError)


def gap_bound(c):
    """Longest road stretch that coupled NMS can leave without a vertex

    Arguments:
    Obj:c     -- gap_config.

    Returns:
    Float     -- sqrt((2 d_r - dd2)^2 - (d_k + dd1)^2)
                 + sqrt((2 d_r - dd3)^2 - (d_k + dd1)^2) + (d_r + dd4)
    """
    dd1, dd2, dd3, dd4 = c.deltas
    side = c.d_k + dd1
    total = c.d_r + dd4
    for reach in (2 * c.d_r - dd2, 2 * c.d_r - dd3):
        radicand = reach * reach - side * side
        if reach < 0 or radicand < 0:
            error(gap_bound, 'Fatal', 'Negative radicand %s for reach %s, side %s.' % (radicand, reach, side), DomainError)
        total += math.sqrt(radicand)
    return total


class collinear_configuration(object):
    """Three collinear road stretches A-B, B-C, C-E

    Attributes:
    Float:ab, bc, ce -- Stretch lengths.
    Float:l1         -- Total span A to E.
    Float:l2         -- Free length between the vertices at B and C.
    Float:d_r        -- Road suppression radius.
    """

    def __init__(self, ab, bc, ce, l2, d_r):
        self.ab = ab
        self.bc = bc
        self.ce = ce
        self.l1 = ab + bc + ce
        self.l2 = l2
        self.d_r = d_r

    def __repr__(self):
        return 'Collinear Configuration: L1 %.3f L2 %.3f' % (self.l1, self.l2)


def sample_collinear_configuration(rng, d_k, d_r):
    """Random stretch layout where a keypoint at A and road vertices at B
    and C survive suppression

    Slack deltas are drawn from [0, d_r/4). A-B is a fraction of the
    farthest reach a vertex at B can have while staying outside the
    keypoint disk, C-E is one road radius, B-C is drawn from [0, 3 d_r)
    and the free length L2 exceeds B-C by at most d_r.
    """
    dd1, dd2 = rng.uniform(0.0, d_r / 4.0, size=2)
    reach = math.sqrt(max(0.0, (2 * d_r - dd2) ** 2 - (d_k + dd1) ** 2))
    ab = float(rng.uniform(0.0, 1.0)) * reach
    bc = float(rng.uniform(0.0, 3 * d_r))
    gap = d_r - float(rng.uniform(0.0, d_r))
    return collinear_configuration(ab, bc, float(d_r), bc + gap, d_r)


def lemma_holds(cfg):
    """True when the span is short enough or a vertex fits in the middle."""
    return cfg.l1 < 4 * cfg.d_r or cfg.l2 > cfg.d_r
