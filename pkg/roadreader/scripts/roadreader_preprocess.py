#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_preprocess.py
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

import os
import sys

from roadreader import settings
from roadreader.road_io import read_graph, write_graph, write_grid, write_candidates
from roadreader.gtprep.densify import densify_params
from roadreader.gtprep.prepare import preprocess_graph
from roadreader.utils import check_input_path, create_output_dir
from roadreader.scripts.common import run_script, parse_size, add_refine_arguments, refine_params_from, say

description = 'Turn a ground truth graph into training masks and labeled candidate edges.'
seeded = True


def add_arguments(parser):
    parser.add_argument('--graph', required=True, dest='graph',
                        help='Ground truth graph JSON.')

    parser.add_argument('--size', required=True, type=parse_size, dest='size',
                        help='Canvas size, HxW or one side.')

    parser.add_argument('--d-r', type=int, dest='d_r', default=settings.road_radius,
                        help='Road suppression radius, densified gaps fall in [d_r, 2*d_r-1]. (default: %s)' % settings.road_radius)

    parser.add_argument('--d-nei', type=float, dest='d_nei', default=settings.neighbor_radius,
                        help='Candidate edge radius. (default: %s)' % settings.neighbor_radius)

    parser.add_argument('--thickness', type=float, dest='thickness', default=settings.centerline_thickness,
                        help='Road stroke width. (default: %s)' % settings.centerline_thickness)

    parser.add_argument('--disk-radius', type=float, dest='disk_radius', default=settings.disk_radius,
                        help='Keypoint and overpass disk radius. (default: %s)' % settings.disk_radius)

    parser.add_argument('--no-refine', action='store_true', dest='no_refine',
                        help='Skip overpass refinement.')

    add_refine_arguments(parser)

    parser.add_argument('-o', '--out-dir', dest='out_dir', default=settings.output_dir,
                        help='Directory for masks, graphs and candidates. (default: %s)' % settings.output_dir)


def run(args, report):
    g = read_graph(check_input_path(args.graph))
    h, w = args.size
    refine_cfg = None if args.no_refine else refine_params_from(args)

    with report.stage('preprocess'):
        result = preprocess_graph(g, h, w, densify_params(args.d_r, args.seed), refine_cfg,
                                  d_nei=args.d_nei, thickness=args.thickness, disk_radius=args.disk_radius)

    out = create_output_dir(args.out_dir)
    with report.stage('write'):
        for name, grid in result.masks:
            write_grid(grid, report.add_output(os.path.join(out, '%s.pgm' % name)))
        write_graph(result.thinned, report.add_output(os.path.join(out, 'dense.json')))
        write_graph(result.graph, report.add_output(os.path.join(out, 'target.json')))
        write_candidates(result.candidates, report.add_output(os.path.join(out, 'candidates.json')))

    say(args, result.display())


def main():
    return run_script('preprocess', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
