#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_eval.py
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
from roadreader.metrics.apls import apls, apls_params
from roadreader.metrics.defines import METRIC_LIST, METRIC_BOTH, METRIC_TOPO, METRIC_APLS, MATCH_LIST, MATCH_GREEDY
from roadreader.metrics.topo import topo, topo_params
from roadreader.road_io import read_graph, write_json
from roadreader.utils import check_input_path
from roadreader.scripts.common import run_script, say

description = 'Score a predicted graph against ground truth with TOPO and APLS.'
seeded = False


def add_arguments(parser):
    parser.add_argument('--gt', required=True, dest='gt',
                        help='Ground truth graph JSON.')

    parser.add_argument('--pred', required=True, dest='pred',
                        help='Predicted graph JSON.')

    parser.add_argument('--metric', dest='metric', default=METRIC_BOTH, choices=METRIC_LIST,
                        help='Metric to compute. (default: %s)' % METRIC_BOTH)

    parser.add_argument('--seed-interval', type=float, dest='seed_interval', default=settings.topo_seed_interval,
                        help='TOPO seed spacing. (default: %s)' % settings.topo_seed_interval)

    parser.add_argument('--propagation-dist', type=float, dest='propagation_dist', default=settings.topo_propagation_dist,
                        help='TOPO subgraph reach. (default: %s)' % settings.topo_propagation_dist)

    parser.add_argument('--sample-interval', type=float, dest='sample_interval', default=settings.topo_sample_interval,
                        help='TOPO sample spacing. (default: %s)' % settings.topo_sample_interval)

    parser.add_argument('--match-radius', type=float, dest='match_radius', default=settings.topo_match_radius,
                        help='TOPO match distance. (default: %s)' % settings.topo_match_radius)

    parser.add_argument('--angle-threshold', type=float, dest='angle_threshold', default=settings.topo_angle_threshold,
                        help='TOPO heading tolerance in degrees. (default: %s)' % settings.topo_angle_threshold)

    parser.add_argument('--matching', dest='matching', default=MATCH_GREEDY, choices=MATCH_LIST,
                        help='TOPO sample matching. (default: %s)' % MATCH_GREEDY)

    parser.add_argument('--control-interval', type=float, dest='control_interval', default=settings.apls_control_interval,
                        help='APLS control node spacing. (default: %s)' % settings.apls_control_interval)

    parser.add_argument('--snap-radius', type=float, dest='snap_radius', default=settings.apls_snap_radius,
                        help='APLS snap distance. (default: %s)' % settings.apls_snap_radius)

    parser.add_argument('--report', dest='report',
                        help='Write parameters, scores and per seed diagnostics to this JSON file.')


def run(args, report):
    gt = read_graph(check_input_path(args.gt))
    pred = read_graph(check_input_path(args.pred))
    scores = {}
    details = {}

    if args.metric in (METRIC_TOPO, METRIC_BOTH):
        p = topo_params(args.seed_interval, args.propagation_dist, args.sample_interval,
                        args.match_radius, args.angle_threshold, args.matching)
        with report.stage('topo'):
            result = topo(gt, pred, p)
        scores.update(dict(result))
        details['topo_seeds'] = result.seeds

    if args.metric in (METRIC_APLS, METRIC_BOTH):
        p = apls_params(args.control_interval, args.snap_radius)
        with report.stage('apls'):
            result = apls(gt, pred, p)
        scores.update(dict(result))
        details['apls_pairs'] = result.pairs
        details['apls_unsnapped'] = result.unsnapped

    report.scores = scores
    report.details = details
    if args.report:
        write_json(report.to_json(), args.report)
        report.add_output(args.report)

    say(args, '\n'.join('%s: %.4f' % (k, v) for k, v in scores.items()))


def main():
    return run_script('eval', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
