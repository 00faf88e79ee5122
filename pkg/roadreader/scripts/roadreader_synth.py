#!/usr/bin/env python
#############################################################
# road_reader/scripts/roadreader_synth.py
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
from roadreader.featex.sampler import sample_spec
from roadreader.gtlayer.weights import random_model_weights, write_model_weights
from roadreader.pipeline.defines import STYLE_LIST, STYLE_GRID
from roadreader.pipeline.synth import synth_scene
from roadreader.road_io import write_graph, write_grid, write_features
from roadreader.utils import create_output_dir
from roadreader.scripts.common import run_script, say

description = 'Generate a synthetic scene: ground truth graph, soft masks and a feature map.'
seeded = True


def add_arguments(parser):
    parser.add_argument('--size', type=int, dest='size', default=512,
                        help='Canvas side, >= 256 and a multiple of 16. (default: 512)')

    parser.add_argument('--style', dest='style', default=STYLE_GRID, choices=STYLE_LIST,
                        help='Road layout. (default: %s)' % STYLE_GRID)

    parser.add_argument('--noise', type=float, dest='noise', default=0.0,
                        help='Salt noise density on the road raster. (default: 0)')

    parser.add_argument('--blur', type=float, dest='blur', default=settings.synth_blur,
                        help='Gaussian sigma of the masks. (default: %s)' % settings.synth_blur)

    parser.add_argument('--weights-out', dest='weights_out',
                        help='Also write seeded random model weights fitting the feature map.')

    parser.add_argument('-o', '--out-dir', dest='out_dir', default=settings.output_dir,
                        help='Directory for the scene files. (default: %s)' % settings.output_dir)


def run(args, report):
    with report.stage('synth'):
        gt, bundle, features = synth_scene(args.seed, args.size, args.style, args.noise, args.blur)

    out = create_output_dir(args.out_dir)
    with report.stage('write'):
        write_graph(gt, report.add_output(os.path.join(out, 'gt.json')))
        for name, grid in bundle:
            write_grid(grid, report.add_output(os.path.join(out, '%s.pgm' % name)))
        write_features(features, report.add_output(os.path.join(out, 'features.fmap')))

    if args.weights_out:
        with report.stage('weights'):
            weights = random_model_weights(args.seed, sample_spec().n_sampled * features.depth)
            write_model_weights(weights, report.add_output(args.weights_out))

    report.scores = {'nodes': len(gt), 'edges': gt.number_of_edges()}
    say(args, gt.display())


def main():
    return run_script('synth', description, add_arguments, run, seed=seeded)


if __name__=='__main__':
    sys.exit(main())
