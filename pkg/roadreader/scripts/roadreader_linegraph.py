#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_linegraph.py
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

from roadreader.graphs.line import line_graph
from roadreader.road_io import read_graph, write_graph
from roadreader.utils import check_input_path
from roadreader.scripts.common import run_script, say

description = 'Write the line graph of a graph, one node per edge at its midpoint.'
seeded = False


def add_arguments(parser):
    parser.add_argument('--graph', required=True, dest='graph',
                        help='Graph JSON.')

    parser.add_argument('--out', required=True, dest='out',
                        help='Line graph JSON. Node k stands for the k-th edge in (min id, max id) order.')


def run(args, report):
    g = read_graph(check_input_path(args.graph))
    with report.stage('linegraph'):
        lg = line_graph(g).to_graph(g)
    write_graph(lg, report.add_output(args.out))
    report.scores = {'line_nodes': len(lg), 'line_edges': lg.number_of_edges()}
    say(args, lg.display())


def main():
    return run_script('linegraph', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
