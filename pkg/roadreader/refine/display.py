#!/usr/bin/env python
#############################################################
# road_reader/refine/display.py
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

def refine_result(result, tab=''):
    buf = '%s%s\n' % (tab, result)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sIterations: %s\n' % (tab, result.iterations)
    buf += '\t%sConverged: %s\n' % (tab, result.converged)
    buf += '\t%sNodes: %s\n' % (tab, len(result.graph))
    buf += '\t%sCrossings Left: %s\n' % (tab, len(result.witnesses))
    for (a, b), (c, d) in result.witnesses:
        buf += '\t\t%s(%s, %s) x (%s, %s)\n' % (tab, a, b, c, d)
    return buf
