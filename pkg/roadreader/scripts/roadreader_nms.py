#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_nms.py
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

import sys

from roadreader.core.grid import prob_grid, mask_bundle
from roadreader.nms import coupled_nms
from roadreader.road_io import read_grid, write_vertices
from roadreader.core.defines import PGM_MAGIC
from roadreader.scripts.common import run_script, typed_input, add_nms_arguments, nms_params_from, say

description = 'Extract keypoint, overpass and road vertices from probability masks.'
seeded = False


def add_mask_arguments(parser):
    parser.add_argument('--road', required=True, dest='road',
                        help='Road mask PGM.')

    parser.add_argument('--keypoint', required=True, dest='keypoint',
                        help='Keypoint mask PGM.')

    parser.add_argument('--overpass', dest='overpass',
                        help='Overpass mask PGM, all zero when left out.')


def read_bundle(args):
    road = read_grid(typed_input(args.road, PGM_MAGIC))
    keypoint = read_grid(typed_input(args.keypoint, PGM_MAGIC))
    if args.overpass:
        overpass = read_grid(typed_input(args.overpass, PGM_MAGIC))
    else:
        overpass = prob_grid.zeros(*road.shape)
    return mask_bundle(road, keypoint, overpass)


def add_arguments(parser):
    add_mask_arguments(parser)
    add_nms_arguments(parser)

    parser.add_argument('--out', required=True, dest='out',
                        help='Vertices JSON.')


def run(args, report):
    bundle = read_bundle(args)
    with report.stage('nms'):
        vertices = coupled_nms(bundle, nms_params_from(args))
    write_vertices(vertices, report.add_output(args.out))

    counts = {}
    for v in vertices:
        counts[v.source] = counts.get(v.source, 0) + 1
    report.scores = counts
    say(args, '%s vertices: %s' % (len(vertices), ', '.join('%s %s' % kv for kv in sorted(counts.items()))))


def main():
    return run_script('nms', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
