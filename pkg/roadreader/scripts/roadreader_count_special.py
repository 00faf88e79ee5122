#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_count_special.py
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

from roadreader.graphs.components import count_special_components
from roadreader.road_io import read_graph
from roadreader.utils import check_input_path
from roadreader.scripts.common import run_script, say

description = 'Count triangle and 3-star components, the graphs whose line graphs coincide.'
seeded = False


def add_arguments(parser):
    parser.add_argument('--graph', required=True, nargs='+', dest='graph',
                        help='One or more graph JSON files.')


def run(args, report):
    scores = {}
    for path in args.graph:
        triangles, stars = count_special_components(read_graph(check_input_path(path)))
        scores[path] = {'triangles': triangles, 'stars': stars}
        say(args, '%s: %s triangles, %s stars' % (path, triangles, stars))
    report.scores = scores


def main():
    return run_script('count-special', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
