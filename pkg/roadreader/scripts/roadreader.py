#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader.py
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
import argparse

from roadreader.scripts.common import add_common_arguments, execute
from roadreader.scripts import (roadreader_preprocess, roadreader_refine, roadreader_nms,
                                roadreader_build_graph, roadreader_linegraph, roadreader_count_special,
                                roadreader_whitney_check, roadreader_extract, roadreader_synth,
                                roadreader_eval, roadreader_render)

COMMANDS = [
    ('preprocess', roadreader_preprocess),
    ('refine', roadreader_refine),
    ('nms', roadreader_nms),
    ('build-graph', roadreader_build_graph),
    ('linegraph', roadreader_linegraph),
    ('count-special', roadreader_count_special),
    ('whitney-check', roadreader_whitney_check),
    ('extract', roadreader_extract),
    ('synth', roadreader_synth),
    ('eval', roadreader_eval),
    ('render', roadreader_render),
]


def build_parser():
    description = 'Road network graphs from road probability masks.'
    parser = argparse.ArgumentParser(prog='roadreader', description=description)
    sub = parser.add_subparsers(dest='command', metavar='command')
    for name, module in COMMANDS:
        cmd = sub.add_parser(name, help=module.description, description=module.description)
        add_common_arguments(cmd, module.seeded)
        module.add_arguments(cmd)
        cmd.set_defaults(_run=module.run)
    return parser


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv

    if not argv:
        parser.print_help()
        return 1

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 1
    return execute(args.command, args._run, args)


if __name__=='__main__':
    sys.exit(main())
