#!/usr/bin/env python
#############################################################
# road_reader/metrics/defines.py
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

# Sample matching.
MATCH_GREEDY = 'greedy'
MATCH_OPTIMAL = 'optimal'
MATCH_LIST = [MATCH_GREEDY, MATCH_OPTIMAL]

METRIC_TOPO = 'topo'
METRIC_APLS = 'apls'
METRIC_BOTH = 'both'
METRIC_LIST = [METRIC_TOPO, METRIC_APLS, METRIC_BOTH]

# Relative snap positions this close to an end reuse the end node.
SNAP_END_TOL = 1e-9
