#!/usr/bin/env python
#############################################################
# road_reader/pipeline/extract.py
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

from contextlib import nullcontext
from concurrent.futures import ThreadPoolExecutor

from roadreader import settings
from roadreader.debug import error, log, verbose_display, ConfigurationError
from roadreader.core.candidates import candidate_set
from roadreader.core.defines import SOURCE_ROAD
from roadreader.core.graph import road_graph
from roadreader.graphs.euclid import neighbor_pairs
from roadreader.nms import coupled_nms, nms_params
from roadreader.pipeline.fuse import edge_key, fuse_predictions
from roadreader.pipeline.scorers import edge_scorer, SCORER_TRANSFORMER
from roadreader.pipeline.windows import plan_windows, single_window


class extract_params(object):
    """Inference settings

    Attributes:
    Obj:nms                  -- nms_params.
    Float:d_nei              -- Candidate radius.
    Float:decision_threshold -- Fused probability an edge needs.
    Tuple:layout             -- (window, grid_n), None for one window.
    """

    def __init__(self, nms=None, d_nei=None, decision_threshold=None, layout=None):
        self.__name__ = 'Extract_Params'
        self.nms = nms_params() if nms is None else nms
        self.d_nei = settings.neighbor_radius if d_nei is None else d_nei
        self.decision_threshold = settings.decision_threshold if decision_threshold is None else decision_threshold
        self.layout = layout
        self._check_errors()

    def __repr__(self):
        return 'Extract Params'

    def __iter__(self):
        yield 'd_nei', self.d_nei
        yield 'decision_threshold', self.decision_threshold
        yield 'layout', self.layout
        for key, value in self.nms:
            yield key, value

    def _check_errors(self):
        if self.d_nei <= 0:
            error(self, 'Fatal', 'd_nei must be > 0.', ConfigurationError)
        if not 0.0 <= self.decision_threshold <= 1.0:
            error(self, 'Fatal', 'decision_threshold must be in [0,1].', ConfigurationError)


def vertex_candidates(vertices, d_nei):
    """candidate_set over NMS vertices at pixel centers, id = list index."""
    points = [(v.x + 0.5, v.y + 0.5) for v in vertices]
    pairs = neighbor_pairs(points, d_nei).tolist()
    return candidate_set([(i, x, y) for i, (x, y) in enumerate(points)], pairs, d_nei)


def _score_window(scorer, cands, layout, k):
    points = [(x, y) for _, x, y in cands.vertices]
    inside = layout.interior(k, points)
    pairs = [(a, b) for a, b in cands.pairs if inside[a] and inside[b]]
    if not pairs:
        return []
    used = sorted(set(n for pair in pairs for n in pair))
    sub = candidate_set([cands.vertices[n] for n in used], pairs, cands.d_nei)
    probs = scorer.score(sub)
    return [(edge_key(cands.position(a), cands.position(b)), float(p)) for (a, b), p in zip(pairs, probs)]


def extract_network(bundle, features, scorer, params, report=None):
    """Masks to road graph

    Arguments:
    Obj:bundle    -- mask_bundle.
    Obj:features  -- feature_grid or None. Handed to a transformer
                     scorer, which otherwise needs its own.
    Obj:scorer    -- edge_scorer.
    Obj:params    -- extract_params.
    Obj:report    -- (optional) run_report collecting stage timings.

    Returns:
    Obj           -- road_graph with edge_probs. Nodes sit at pixel
                     centers and keep their NMS index as id; road vertices
                     without a kept edge are dropped.
    """
    def stage(name):
        return report.stage(name) if report is not None else nullcontext()

    if scorer.kind == SCORER_TRANSFORMER:
        if features is not None:
            scorer = edge_scorer(scorer.kind, **dict(scorer.payload, features=features))
        scorer.check_features()
    verbose_display(scorer)

    h, w = bundle.shape
    with stage('nms'):
        vertices = coupled_nms(bundle, params.nms)
    with stage('candidates'):
        cands = vertex_candidates(vertices, params.d_nei)
        if params.layout is None:
            layout = single_window(h, w)
        else:
            layout = plan_windows(h, w, params.layout[0], params.layout[1], params.d_nei)
    verbose_display(layout)

    with stage('score'):
        with ThreadPoolExecutor(max_workers=max(1, settings.threads)) as pool:
            per_window = list(pool.map(lambda k: _score_window(scorer, cands, layout, k), range(len(layout))))

    with stage('fuse'):
        fused = fuse_predictions(entry for window in per_window for entry in window)
        kept = {}
        for a, b in cands.pairs:
            prob = fused.get(edge_key(cands.position(a), cands.position(b)))
            if prob is not None and prob >= params.decision_threshold:
                kept[(a, b)] = prob

        ids = set(n for pair in kept for n in pair)
        ids.update(i for i, v in enumerate(vertices) if v.source != SOURCE_ROAD)
        nodes = [(i, x, y) for i, x, y in cands.vertices if i in ids]
        edges = sorted(kept)
        g = road_graph(nodes, edges, [kept[e] for e in edges])

    log(extract_network, '%s vertices, %s candidates, %s windows, %s edges kept'
        % (len(vertices), len(cands), len(layout), len(edges)))
    return g
