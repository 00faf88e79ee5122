#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_extract.py
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
from roadreader.debug import log
from roadreader.gtlayer.weights import read_model_weights
from roadreader.pipeline.extract import extract_network, extract_params
from roadreader.pipeline.scorers import edge_scorer, SCORER_ALIASES
from roadreader.road_io import read_graph, read_features, write_graph
from roadreader.utils import check_input_path
from roadreader.core.defines import FMAP_MAGIC
from roadreader.scripts.common import run_script, typed_input, add_nms_arguments, nms_params_from, say
from roadreader.scripts.roadreader_nms import add_mask_arguments, read_bundle

description = 'Extract a road graph from masks with a chosen edge scorer.'
seeded = False


def add_arguments(parser):
    add_mask_arguments(parser)
    add_nms_arguments(parser)

    parser.add_argument('--features', dest='features',
                        help='Feature map FMAP, needed by the transformer scorer.')

    parser.add_argument('--weights', dest='weights',
                        help='Model weights JSON, needed by the transformer scorer.')

    parser.add_argument('--scorer', dest='scorer', default='mask', choices=sorted(SCORER_ALIASES),
                        help='Edge scorer. (default: mask)')

    parser.add_argument('--gt', dest='gt',
                        help='Ground truth graph JSON, needed by the oracle scorer.')

    parser.add_argument('--match-tol', type=float, dest='match_tol', default=settings.oracle_match_tol,
                        help='Oracle endpoint to node distance. (default: %s)' % settings.oracle_match_tol)

    parser.add_argument('--samples', type=int, dest='samples', default=settings.mask_samples,
                        help='Mask scorer samples per edge. (default: %s)' % settings.mask_samples)

    parser.add_argument('--window', type=int, dest='window',
                        help='Sliding window side, one window over the canvas when left out.')

    parser.add_argument('--grid', type=int, dest='grid', default=settings.window_grid,
                        help='Windows per axis when --window is set. (default: %s)' % settings.window_grid)

    parser.add_argument('--d-nei', type=float, dest='d_nei', default=settings.neighbor_radius,
                        help='Candidate edge radius. (default: %s)' % settings.neighbor_radius)

    parser.add_argument('--threshold', type=float, dest='threshold', default=settings.decision_threshold,
                        help='Fused probability an edge needs. (default: %s)' % settings.decision_threshold)

    parser.add_argument('--out', required=True, dest='out',
                        help='Predicted graph JSON.')


def build_scorer(args, bundle):
    kind = SCORER_ALIASES[args.scorer]
    if args.scorer == 'oracle':
        gt = read_graph(check_input_path(args.gt)) if args.gt else None
        return edge_scorer(kind, gt=gt, match_tol=args.match_tol)
    if args.scorer == 'mask':
        return edge_scorer(kind, road=bundle.road, n_samples=args.samples)
    weights = read_model_weights(check_input_path(args.weights)) if args.weights else None
    return edge_scorer(kind, weights=weights)


def run(args, report):
    bundle = read_bundle(args)
    features = read_features(typed_input(args.features, FMAP_MAGIC)) if args.features else None
    scorer = build_scorer(args, bundle)
    layout = (args.window, args.grid) if args.window else None
    params = extract_params(nms_params_from(args), args.d_nei, args.threshold, layout)
    log(run, 'Extracting with %s' % scorer)

    g = extract_network(bundle, features, scorer, params, report)
    write_graph(g, report.add_output(args.out))
    report.scores = {'nodes': len(g), 'edges': g.number_of_edges()}
    say(args, g.display())


def main():
    return run_script('extract', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
