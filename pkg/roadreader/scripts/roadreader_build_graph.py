#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_build_graph.py
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

from roadreader import settings
from roadreader.graphs.euclid import build_euclidean_graph
from roadreader.road_io import read_vertices, write_graph
from roadreader.utils import check_input_path
from roadreader.scripts.common import run_script, say

description = 'Connect every pair of extracted vertices within d_nei.'
seeded = False


def add_arguments(parser):
    parser.add_argument('--vertices', required=True, dest='vertices',
                        help='Vertices JSON written by nms.')

    parser.add_argument('--d-nei', type=float, dest='d_nei', default=settings.neighbor_radius,
                        help='Candidate edge radius. (default: %s)' % settings.neighbor_radius)

    parser.add_argument('--out', required=True, dest='out',
                        help='Candidate graph JSON.')


def run(args, report):
    vertices = read_vertices(check_input_path(args.vertices))
    # Vertices are pixel indices, graph nodes sit at pixel centers.
    with report.stage('build'):
        g = build_euclidean_graph([(v.x + 0.5, v.y + 0.5) for v in vertices], args.d_nei)
    write_graph(g, report.add_output(args.out))
    report.scores = {'nodes': len(g), 'edges': g.number_of_edges()}
    say(args, g.display())


def main():
    return run_script('build-graph', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
