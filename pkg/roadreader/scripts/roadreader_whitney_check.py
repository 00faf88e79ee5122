#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_whitney_check.py
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

from roadreader.debug import error, ValidationError
from roadreader.graphs.components import count_special_components
from roadreader.graphs.iso import (whitney_check, edge_orbit_check, prism_separation,
                                   atlas_graphs, is_triangle, is_star, is_paw)
from roadreader.scripts.common import run_script, say

description = 'Exhaustive line graph checks over all small connected graphs.'
seeded = False


def add_arguments(parser):
    parser.add_argument('--max-nodes', type=int, dest='max_nodes', default=6,
                        help='Largest graph size checked, at most 7. (default: 6)')


def run(args, report):
    problems = []

    with report.stage('whitney'):
        pairs = whitney_check(args.max_nodes)
    unexpected = [(g1, g2) for g1, g2 in pairs
                  if not ((is_triangle(g1) and is_star(g2)) or (is_star(g1) and is_triangle(g2)))]
    if unexpected:
        problems.append('%s graph pairs share a line graph besides the triangle and 3-star' % len(unexpected))

    with report.stage('special'):
        counts = {}
        for g in atlas_graphs(min(args.max_nodes, 4)):
            if is_triangle(g):
                counts['triangle'] = count_special_components(g)
            elif is_star(g):
                counts['star'] = count_special_components(g)
    if counts.get('triangle', (1, 0)) != (1, 0) or counts.get('star', (0, 1)) != (0, 1):
        problems.append('special component counts off: %s' % counts)

    # The paw's line graph is the diamond, whose orbits merge edges
    # that no automorphism of the paw relates.
    with report.stage('edge_orbits'):
        failures = edge_orbit_check(args.max_nodes)
    known = [g for g, _ in failures if is_paw(g)]
    others = [g for g, _ in failures if not is_paw(g)]
    if others:
        problems.append('%s graphs where line graph orbits miss edge set orbits' % len(others))

    with report.stage('prism'):
        endpoints_agree, line_agree, same = prism_separation()
    if not endpoints_agree or line_agree or same:
        problems.append('prism witness not separated')

    report.scores = {'shared_line_graphs': len(pairs), 'unexpected_pairs': len(unexpected),
                     'edge_orbit_known': len(known), 'edge_orbit_failures': len(others),
                     'prism_separated': endpoints_agree and not line_agree and not same}
    say(args, 'Graphs up to %s nodes: %s shared line graph pairs, %s unexpected, '
        '%s edge orbit mismatches beyond the paw, prism %s'
        % (args.max_nodes, len(pairs), len(unexpected), len(others),
           'separated' if report.scores['prism_separated'] else 'NOT separated'))

    if problems:
        error(run, 'Fatal', '; '.join(problems), ValidationError)


def main():
    return run_script('whitney-check', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
