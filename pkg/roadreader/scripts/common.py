#!/usr/bin/env python
#############################################################
# road_reader/scripts/common.py
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
import json
import argparse
import traceback

from roadreader import settings
from roadreader.debug import error, RoadReaderError, InputError
from roadreader.core.defines import PGM_MAGIC, FMAP_MAGIC, JSON_MAGIC
from roadreader.report import run_report
from roadreader.refine import refine_params
from roadreader.nms import nms_params
from roadreader.utils import guess_filetype

# Flags that steer the run but are not parameters of it.
_RUN_FLAGS = ('json', 'log', 'verbose', 'threads', 'traceback')


def parse_size(text):
    """'HxW' or a single side, to (h, w)."""
    try:
        parts = [int(v) for v in text.lower().split('x')]
    except ValueError:
        raise argparse.ArgumentTypeError('Size must look like 512 or 512x768, got %r.' % text)
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2 or min(parts) <= 0:
        raise argparse.ArgumentTypeError('Size must look like 512 or 512x768, got %r.' % text)
    return tuple(parts)


_KIND_NAMES = {PGM_MAGIC: 'PGM grid', FMAP_MAGIC: 'feature map', JSON_MAGIC: 'JSON document'}


def typed_input(path, magic):
    """Path of an existing input whose contents start like magic."""
    ftype = guess_filetype(path)
    if ftype != magic:
        error(typed_input, 'Fatal', '%s is a %s, expected a %s.' % (path, _KIND_NAMES[ftype], _KIND_NAMES[magic]), InputError)
    return path


def add_common_arguments(parser, seed=False):
    parser.add_argument('-l', '--log', action='store_true', dest='log',
                        help='Print progress information to stderr.')

    parser.add_argument('-v', '--verbose-log', action='store_true', dest='verbose',
                        help='Prints nearly everything about anything to stderr.')

    parser.add_argument('--json', action='store_true', dest='json',
                        help='Print the run report as JSON on stdout.')

    parser.add_argument('--threads', type=int, dest='threads', default=settings.threads,
                        help='Worker cap for parallel stages. (default: %s)' % settings.threads)

    parser.add_argument('--traceback', action='store_true', dest='traceback',
                        help='Print a stack trace on fatal errors.')

    if seed:
        parser.add_argument('--seed', type=int, dest='seed', default=0,
                            help='Random seed. (default: 0)')


def add_refine_arguments(parser):
    parser.add_argument('--tau', type=float, dest='tau', default=settings.refine_tau,
                        help='Intersection threshold. (default: %s)' % settings.refine_tau)

    parser.add_argument('--gamma', type=float, dest='gamma', default=settings.refine_gamma,
                        help='Merge gap for stacked nodes. (default: %s)' % settings.refine_gamma)

    parser.add_argument('--alpha', type=float, dest='alpha', default=settings.refine_alpha,
                        help='Move length per iteration. (default: %s)' % settings.refine_alpha)

    parser.add_argument('--max-iters', type=int, dest='max_iters', default=settings.refine_max_iters,
                        help='Iteration cap. (default: %s)' % settings.refine_max_iters)

    parser.add_argument('--period', type=int, dest='period', default=settings.refine_period,
                        help='Contract every period-th iteration. (default: %s)' % settings.refine_period)

    parser.add_argument('--eps', type=float, dest='eps', default=settings.refine_eps,
                        help='Smallest adjustment that moves a node. (default: %s)' % settings.refine_eps)


def refine_params_from(args):
    return refine_params(tau=args.tau, gamma=args.gamma, step_scale=args.alpha,
                         max_iters=args.max_iters, merge_period=args.period, tolerance=args.eps)


def add_nms_arguments(parser):
    parser.add_argument('--t-k', type=float, dest='t_k', default=settings.keypoint_threshold,
                        help='Keypoint and overpass threshold. (default: %s)' % settings.keypoint_threshold)

    parser.add_argument('--t-r', type=float, dest='t_r', default=settings.road_threshold,
                        help='Road threshold. (default: %s)' % settings.road_threshold)

    parser.add_argument('--d-k', type=float, dest='d_k', default=settings.keypoint_radius,
                        help='Keypoint suppression radius. (default: %s)' % settings.keypoint_radius)

    parser.add_argument('--d-r', type=float, dest='d_r', default=settings.road_radius,
                        help='Road suppression radius. (default: %s)' % settings.road_radius)


def nms_params_from(args):
    return nms_params(t_k=args.t_k, t_r=args.t_r, d_k=args.d_k, d_r=args.d_r)


def say(args, text):
    """Human output, silenced when stdout carries the JSON report."""
    if not args.json:
        print(text)


def apply_settings(args):
    settings.logging_on = args.log
    settings.logging_on_verbose = args.verbose
    settings.fatal_traceback = args.traceback
    settings.threads = max(1, args.threads)


def execute(command, run, args):
    """Run one subcommand

    Returns:
    Int         -- 0 on success, the error's exit_code for RoadReaderError,
                   1 for anything else.
    """
    apply_settings(args)
    params = dict((k, v) for k, v in vars(args).items() if not k.startswith('_') and k not in _RUN_FLAGS)
    params.pop('command', None)
    report = run_report(command, params)
    try:
        run(args, report)
        if args.json:
            print(report.dumps())
        return 0

    except RoadReaderError as e:
        code = e.exit_code
        kind = e.__class__.__name__
        message = str(e)

    except Exception as e:
        if settings.fatal_traceback:
            traceback.print_exc()
        code = 1
        kind = 'InternalError'
        message = '%s: %s' % (e.__class__.__name__, e)

    print('%s: %s: %s' % (command, kind, message), file=sys.stderr)
    if args.json:
        print(json.dumps({'command': command, 'error': {'type': kind, 'message': message, 'exit_code': code}}, indent=1))
    return code


def run_script(command, description, add_arguments, run, seed=False, argv=None):
    """Entry point body of a single command script."""
    parser = argparse.ArgumentParser(prog='roadreader_%s' % command.replace('-', '_'), description=description)
    add_common_arguments(parser, seed)
    add_arguments(parser)

    if argv is None and len(sys.argv) == 1:
        parser.print_help()
        return 1

    args = parser.parse_args(argv)
    return execute(command, run, args)
