#!/usr/bin/env python
#############################################################
# road_reader/core/defines.py
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

import struct

# Feature map file.
FMAP_MAGIC = b'FMAP'
FMAP_HDR_FORMAT = '<4sIII'
FMAP_HDR_FIELDS = ['magic',         # FMAP
                   'gh',            # Grid rows.
                   'gw',            # Grid columns.
                   'depth']         # Channels per cell.
FMAP_HDR_SZ = struct.calcsize(FMAP_HDR_FORMAT)
FMAP_VALUE_DTYPE = '<f4'

# Probability grid file, binary PGM.
PGM_MAGIC = b'P5'
PGM_MAXVAL = 255

# JSON documents are sniffed by their first non-blank byte.
JSON_MAGIC = b'{'

# Mask a vertex was extracted from.
SOURCE_KEYPOINT = 'keypoint'
SOURCE_OVERPASS = 'overpass'
SOURCE_ROAD = 'road'
SOURCE_LIST = [SOURCE_KEYPOINT, SOURCE_OVERPASS, SOURCE_ROAD]

# Geometry tolerance on cross products.
GEOM_EPS = 1e-9

# Keypoint turn angle window, degrees, inclusive.
KEYPOINT_ANGLE_MIN = 60.0
KEYPOINT_ANGLE_MAX = 120.0
