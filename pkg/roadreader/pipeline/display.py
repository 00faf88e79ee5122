#!/usr/bin/env python
#############################################################
# road_reader/pipeline/display.py
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

def window_layout(layout, tab=''):
    buf = '%s%s\n' % (tab, layout)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sWindow: %s\n' % (tab, layout.window)
    buf += '\t%sGrid: %sx%s\n' % (tab, layout.grid_n, layout.grid_n)
    for k, (x0, y0) in enumerate(layout.offsets):
        buf += '\t\t%s%s: (%s, %s)\n' % (tab, k, x0, y0)
    return buf


def edge_scorer(scorer, tab=''):
    buf = '%s%s\n' % (tab, scorer)
    buf += '%s---------------------\n' % (tab)
    for key in sorted(scorer.payload):
        value = scorer.payload[key]
        if isinstance(value, (int, float, str)):
            buf += '\t%s%s: %s\n' % (tab, key, value)
        else:
            buf += '\t%s%s: %r\n' % (tab, key, value)
    return buf
