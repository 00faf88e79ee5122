#!/usr/bin/env python
#############################################################
# road_reader/metrics/display.py
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

def topo_result(result, tab=''):
    buf = '%s%s\n' % (tab, result)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sSeeds: %s\n' % (tab, len(result.seeds))
    buf += '\t%sLocated: %s\n' % (tab, sum(1 for s in result.seeds if s['located']))
    buf += '\t%sGT Samples: %s\n' % (tab, sum(s['gt_samples'] for s in result.seeds))
    buf += '\t%sProp Samples: %s\n' % (tab, sum(s['prop_samples'] for s in result.seeds))
    buf += '\t%sMatched: %s\n' % (tab, sum(s['matched'] for s in result.seeds))
    return buf


def apls_result(result, tab=''):
    buf = '%s%s\n' % (tab, result)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sGT -> Prop Cost: %.4f\n' % (tab, result.gt_to_prop)
    buf += '\t%sProp -> GT Cost: %.4f\n' % (tab, result.prop_to_gt)
    for key in sorted(result.pairs):
        buf += '\t%s%s: %s pairs, %s unsnapped\n' % (tab, key, result.pairs[key], result.unsnapped.get(key, 0))
    return buf
