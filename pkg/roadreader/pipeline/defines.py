#!/usr/bin/env python
#############################################################
# road_reader/pipeline/defines.py
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

# Synthetic scene styles.
STYLE_GRID = 'grid'
STYLE_RADIAL = 'radial'
STYLE_OVERPASS = 'overpass'
STYLE_LIST = [STYLE_GRID, STYLE_RADIAL, STYLE_OVERPASS]

SYNTH_MIN_SIZE = 256
SYNTH_MARGIN = 32
SYNTH_NODE_SPACING = 24                 # Target gap between chain nodes.
SYNTH_STREET_GAP = (64, 128)            # Grid street spacing, inclusive.
SYNTH_NUDGE = 3.0                       # Shift for nodes too close to a crossing road.
SYNTH_NUDGE_DIST = 2.0

# Road mask is a blend of the blurred centerline and node bumps.
SYNTH_LINE_WEIGHT = 0.8
SYNTH_NODE_WEIGHT = 0.2
SYNTH_NODE_RADIUS = 1
