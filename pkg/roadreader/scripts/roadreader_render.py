#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_render.py
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

from roadreader.pipeline.render import render_svg
from roadreader.road_io import read_graph
from roadreader.utils import check_input_path
from roadreader.scripts.common import run_script, parse_size

description = 'Draw a graph as SVG, edges coloured by probability when present.'
seeded = False


def add_arguments(parser):
    parser.add_argument('--graph', required=True, dest='graph',
                        help='Graph JSON.')

    parser.add_argument('--size', type=parse_size, dest='size',
                        help='Canvas HxW or one side, node extent when left out.')

    parser.add_argument('--out', required=True, dest='out',
                        help='SVG file.')


def run(args, report):
    g = read_graph(check_input_path(args.graph))
    size = None if args.size is None else (args.size[1], args.size[0])
    with report.stage('render'):
        render_svg(g, report.add_output(args.out), size)


def main():
    return run_script('render', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
