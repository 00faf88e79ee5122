#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_refine.py
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

from roadreader.road_io import read_graph, write_graph, write_json
from roadreader.refine import refine_graph, witness_points
from roadreader.utils import check_input_path
from roadreader.scripts.common import run_script, add_refine_arguments, refine_params_from, say

description = 'Pull apart crossing edges that share no endpoint and report the overpasses left.'
seeded = False


def add_arguments(parser):
    add_refine_arguments(parser)

    parser.add_argument('--graph', required=True, dest='graph',
                        help='Graph JSON to refine.')

    parser.add_argument('--out', required=True, dest='out',
                        help='Refined graph JSON.')

    parser.add_argument('--overpass-points', dest='overpass_points',
                        help='JSON file for the endpoints of crossings that remain.')


def run(args, report):
    g = read_graph(check_input_path(args.graph))
    with report.stage('refine'):
        result = refine_graph(g, refine_params_from(args))

    write_graph(result.graph, report.add_output(args.out))
    if args.overpass_points:
        write_json({'points': [[x, y] for x, y in witness_points(result)],
                    'witnesses': [[list(e), list(f)] for e, f in result.witnesses],
                    'converged': result.converged,
                    'iterations': result.iterations}, report.add_output(args.overpass_points))

    report.scores = {'iterations': result.iterations, 'converged': result.converged,
                     'crossings_left': len(result.witnesses)}
    say(args, result.display())


def main():
    return run_script('refine', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
