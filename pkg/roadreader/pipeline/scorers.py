#!/usr/bin/env python
#############################################################
# road_reader/pipeline/scorers.py
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

import numpy as np
from scipy.spatial import cKDTree

from roadreader import settings
from roadreader.debug import error, verbose_log, ConfigurationError
from roadreader.core.graph import edge_key
from roadreader.featex.sampler import sample_grid_bilinear, sample_positions, edge_features, sample_spec
from roadreader.graphs.line import line_graph
from roadreader.gtlayer.attention import predict_links
from roadreader.pipeline import display

SCORER_ORACLE = 'oracle'
SCORER_MASK = 'mask_heuristic'
SCORER_TRANSFORMER = 'transformer'
SCORER_LIST = [SCORER_ORACLE, SCORER_MASK, SCORER_TRANSFORMER]

# Command line names.
SCORER_ALIASES = {'oracle': SCORER_ORACLE, 'mask': SCORER_MASK, 'transformer': SCORER_TRANSFORMER}


def oracle_scorer(candidates, gt, match_tol):
    """1 where both endpoints sit near ground truth nodes joined by an edge

    Arguments:
    Obj:candidates  -- candidate_set.
    Obj:gt          -- road_graph.
    Float:match_tol -- Endpoint to node distance, inclusive.

    Returns:
    Array           -- 0/1 per pair.
    """
    pairs = candidates.pairs
    if not pairs or not len(gt):
        return np.zeros(len(pairs))
    ids = gt.node_ids
    tree = cKDTree([gt.position(n) for n in ids])
    near = {}
    for vid, x, y in candidates.vertices:
        near[vid] = [ids[i] for i in tree.query_ball_point((x, y), match_tol)]

    probs = np.zeros(len(pairs))
    for k, (a, b) in enumerate(pairs):
        if any(u != v and gt.has_edge(u, v) for u in near[a] for v in near[b]):
            probs[k] = 1.0
    return probs


def mask_scorer(candidates, road, n_samples):
    """Mean road mask value along each candidate edge

    Pixel i holds the value at x = i + 0.5, so positions shift by half a
    pixel before the bilinear lookup.
    """
    if n_samples < 2:
        error(mask_scorer, 'Fatal', 'n_samples must be >= 2.', ConfigurationError)
    probs = np.zeros(len(candidates))
    for k, (p1, p2) in enumerate(candidates.pair_positions()):
        pts = sample_positions(p1, p2, n_samples)
        probs[k] = sample_grid_bilinear(road.values, pts[:, 0] - 0.5, pts[:, 1] - 0.5).mean()
    return np.clip(probs, 0.0, 1.0)


def transformer_scorer(candidates, features, weights, spec=None):
    """Link classifier over the line graph of the candidate edges."""
    spec = sample_spec() if spec is None else spec
    pairs = candidates.pairs
    if not pairs:
        return np.zeros(0)
    lg = line_graph(candidates.to_graph())
    segments = [(candidates.position(a), candidates.position(b)) for a, b in lg.line_nodes]
    X0 = edge_features(features, segments, spec, weights.mlp)
    probs = predict_links(weights, lg, X0)
    by_edge = dict(zip(lg.line_nodes, probs))
    return np.array([by_edge[edge_key(a, b)] for a, b in pairs])


class edge_scorer(object):
    """Probability source for candidate edges

    Arguments:
    Str:kind      -- One of SCORER_LIST, or a command line alias.
    Dict:payload  -- oracle: gt, match_tol. mask_heuristic: road,
                     n_samples. transformer: features, weights, spec.
    """

    def __init__(self, kind, **payload):
        self.__name__ = 'Edge_Scorer'
        self.kind = SCORER_ALIASES.get(kind, kind)
        self.payload = payload
        self._check_errors()

    def __repr__(self):
        return 'Edge Scorer: %s' % self.kind

    def display(self, tab=''):
        return display.edge_scorer(self, tab)

    def _need(self, *keys):
        for key in keys:
            if self.payload.get(key) is None:
                error(self, 'Fatal', '%s scorer needs %s.' % (self.kind, key), ConfigurationError)

    def _check_errors(self):
        if self.kind not in SCORER_LIST:
            error(self, 'Fatal', 'Unknown scorer %r.' % self.kind, ConfigurationError)
        if self.kind == SCORER_ORACLE:
            self._need('gt')
        elif self.kind == SCORER_MASK:
            self._need('road')
        else:
            self._need('weights')

    def check_features(self):
        """Transformer scoring needs a feature map the weights fit."""
        self._need('features')
        spec = self.payload.get('spec') or sample_spec()
        if self.payload['weights'].mlp.d_in != spec.n_sampled * self.payload['features'].depth:
            error(self, 'Fatal', 'Weights take %s inputs, features give %s x %s.'
                  % (self.payload['weights'].mlp.d_in, spec.n_sampled, self.payload['features'].depth),
                  ConfigurationError)

    def score(self, candidates):
        if self.kind == SCORER_ORACLE:
            probs = oracle_scorer(candidates, self.payload['gt'],
                                  self.payload.get('match_tol', settings.oracle_match_tol))
        elif self.kind == SCORER_MASK:
            probs = mask_scorer(candidates, self.payload['road'],
                                self.payload.get('n_samples', settings.mask_samples))
        else:
            self.check_features()
            probs = transformer_scorer(candidates, self.payload['features'], self.payload['weights'],
                                       self.payload.get('spec'))
        verbose_log(self, '%s scored %s pairs' % (self.kind, len(probs)))
        return probs
