#!/usr/bin/env python
#############################################################
# road_reader/metrics/topo.py
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

import math
from concurrent.futures import ThreadPoolExecutor

import networkx as nx
import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.spatial import cKDTree

from roadreader import settings
from roadreader.debug import error, log, verbose_display, ConfigurationError
from roadreader.core.geometry import nearest_on_segments, polyline_length, point_along, direction, angle_difference
from roadreader.core.graph import trace_chains
from roadreader.metrics import display
from roadreader.metrics.defines import *


class topo_params(object):
    """TOPO settings, pixels and degrees

    Attributes:
    Float:seed_interval     -- Arc length between seeds on the ground truth.
    Float:propagation_dist  -- Geodesic reach of a seed's subgraph.
    Float:sample_interval   -- Arc length between samples.
    Float:match_radius      -- Largest distance of a matched pair.
    Float:angle_threshold   -- Largest heading difference of a matched pair.
    Str:matching            -- MATCH_GREEDY or MATCH_OPTIMAL.
    """

    def __init__(self, seed_interval=None, propagation_dist=None, sample_interval=None,
                 match_radius=None, angle_threshold=None, matching=MATCH_GREEDY):
        self.__name__ = 'Topo_Params'
        self.seed_interval = settings.topo_seed_interval if seed_interval is None else seed_interval
        self.propagation_dist = settings.topo_propagation_dist if propagation_dist is None else propagation_dist
        self.sample_interval = settings.topo_sample_interval if sample_interval is None else sample_interval
        self.match_radius = settings.topo_match_radius if match_radius is None else match_radius
        self.angle_threshold = settings.topo_angle_threshold if angle_threshold is None else angle_threshold
        self.matching = matching
        self._check_errors()

    def __repr__(self):
        return 'Topo Params'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _check_errors(self):
        for key in ('seed_interval', 'propagation_dist', 'sample_interval', 'match_radius', 'angle_threshold'):
            if getattr(self, key) <= 0:
                error(self, 'Fatal', '%s must be > 0.' % key, ConfigurationError)
        if self.angle_threshold > 90:
            error(self, 'Fatal', 'angle_threshold must be <= 90.', ConfigurationError)
        if self.matching not in MATCH_LIST:
            error(self, 'Fatal', 'Unknown matching %r.' % self.matching, ConfigurationError)


class topo_result(object):
    """TOPO scores plus per seed tallies

    Attributes:
    Float:precision   -- matched / proposal samples.
    Float:recall      -- matched / ground truth samples.
    Float:f1          -- Harmonic mean, 0 when both are 0.
    List:seeds        -- Dict per seed: seed, x, y, located, gt_samples,
                         prop_samples, matched.
    """

    def __init__(self, precision, recall, f1, seeds):
        self.__name__ = 'Topo_Result'
        self.precision = precision
        self.recall = recall
        self.f1 = f1
        self.seeds = seeds

    def __repr__(self):
        return 'Topo Result: P %.4f R %.4f F1 %.4f' % (self.precision, self.recall, self.f1)

    def __iter__(self):
        yield 'precision', self.precision
        yield 'recall', self.recall
        yield 'f1', self.f1

    def __getitem__(self, k):
        return (self.precision, self.recall, self.f1)[k]

    def __len__(self):
        return 3

    def display(self, tab=''):
        return display.topo_result(self, tab)


class _side(object):
    # One graph prepared for seed location and geodesic walks.

    def __init__(self, g):
        self.g = g
        self.edges = g.edges
        self.starts = np.array([g.position(a) for a, _ in self.edges]).reshape(-1, 2)
        self.ends = np.array([g.position(b) for _, b in self.edges]).reshape(-1, 2)
        self.nxg = g.to_networkx()

    def locate(self, points):
        return nearest_on_segments(points, self.starts, self.ends)

    def samples(self, k, t, p):
        """(x, y, heading) samples within propagation_dist of a point on edge k."""
        u, v = self.edges[k]
        length = self.g.edge_length(u, v)
        s_p = t * length
        du = nx.single_source_dijkstra_path_length(self.nxg, u, cutoff=p.propagation_dist, weight='weight')
        dv = nx.single_source_dijkstra_path_length(self.nxg, v, cutoff=p.propagation_dist, weight='weight')
        reach = {}
        for n, d in du.items():
            reach[n] = d + s_p
        for n, d in dv.items():
            reach[n] = min(reach.get(n, math.inf), d + length - s_p)

        out = []
        for a, b in self.edges:
            if a not in reach and b not in reach:
                continue
            pa, pb = self.g.position(a), self.g.position(b)
            l_ab = self.g.edge_length(a, b)
            if l_ab == 0:
                continue
            n = max(1, int(round(l_ab / p.sample_interval)))
            heading = direction(pa, pb)
            for i in range(n):
                s = (i + 0.5) * l_ab / n
                if (a, b) == (u, v):
                    geo = abs(s - s_p)
                else:
                    geo = min(reach.get(a, math.inf) + s, reach.get(b, math.inf) + l_ab - s)
                if geo <= p.propagation_dist:
                    f = s / l_ab
                    out.append((pa[0] + (pb[0] - pa[0]) * f, pa[1] + (pb[1] - pa[1]) * f, heading))
        return out


def seed_points(gt, seed_interval):
    """Seeds at (k + 0.5) * L / m along every chain of gt, m = round(L / seed_interval)."""
    seeds = []
    for chain in trace_chains(gt, set()):
        points = [gt.position(n) for n in chain]
        length = polyline_length(points)
        m = max(1, int(round(length / seed_interval)))
        seeds.extend(map(tuple, point_along(points, [(k + 0.5) * length / m for k in range(m)])))
    return seeds


def match_samples(gt_samples, prop_samples, radius, angle_threshold, matching=MATCH_GREEDY):
    """One to one matches within radius and angle_threshold

    Greedy takes pairs by (distance, gt index, prop index). Optimal runs
    linear_sum_assignment, which maximises the match count first.

    Returns:
    Int         -- Number of matched pairs.
    """
    if not gt_samples or not prop_samples:
        return 0
    gxy = np.array([s[:2] for s in gt_samples])
    pxy = np.array([s[:2] for s in prop_samples])
    near = cKDTree(pxy).query_ball_point(gxy, radius)
    cands = []
    for i, js in enumerate(near):
        for j in sorted(js):
            if angle_difference(gt_samples[i][2], prop_samples[j][2]) <= angle_threshold:
                cands.append((float(np.hypot(*(gxy[i] - pxy[j]))), i, j))
    if not cands:
        return 0

    if matching == MATCH_OPTIMAL:
        big = radius * (min(len(gxy), len(pxy)) + 1) + 1.0
        cost = np.full((len(gxy), len(pxy)), big)
        for d, i, j in cands:
            cost[i, j] = d
        rows, cols = linear_sum_assignment(cost)
        return int(np.sum(cost[rows, cols] < big))

    used_g, used_p = set(), set()
    for d, i, j in sorted(cands):
        if i not in used_g and j not in used_p:
            used_g.add(i)
            used_p.add(j)
    return len(used_g)


def topo(gt, prop, p=None):
    """TOPO precision, recall and F1 of prop against gt

    Arguments:
    Obj:gt      -- Ground truth road_graph.
    Obj:prop    -- Proposal road_graph in the same frame.
    Obj:p       -- (optional) topo_params.

    Returns:
    Obj         -- topo_result. Both graphs without edges score 1, one
                   side without edges scores 0.
    """
    p = topo_params() if p is None else p
    n_gt, n_prop = gt.number_of_edges(), prop.number_of_edges()
    if n_gt == 0 and n_prop == 0:
        return topo_result(1.0, 1.0, 1.0, [])
    if n_gt == 0 or n_prop == 0:
        return topo_result(0.0, 0.0, 0.0, [])

    seeds = seed_points(gt, p.seed_interval)
    gside, pside = _side(gt), _side(prop)
    g_idx, g_t, _ = gside.locate(seeds)
    p_idx, p_t, p_dist = pside.locate(seeds)

    def one(k):
        gs = gside.samples(g_idx[k], g_t[k], p)
        diag = {'seed': k, 'x': seeds[k][0], 'y': seeds[k][1], 'located': bool(p_dist[k] <= p.match_radius),
                'gt_samples': len(gs), 'prop_samples': 0, 'matched': 0}
        if diag['located']:
            ps = pside.samples(p_idx[k], p_t[k], p)
            diag['prop_samples'] = len(ps)
            diag['matched'] = match_samples(gs, ps, p.match_radius, p.angle_threshold, p.matching)
        return diag

    with ThreadPoolExecutor(max_workers=max(1, settings.threads)) as pool:
        diags = list(pool.map(one, range(len(seeds))))

    matched = sum(d['matched'] for d in diags)
    gt_total = sum(d['gt_samples'] for d in diags)
    prop_total = sum(d['prop_samples'] for d in diags)
    precision = matched / prop_total if prop_total else 0.0
    recall = matched / gt_total if gt_total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0

    result = topo_result(precision, recall, f1, diags)
    log(topo, '%s seeds, %s of %s located, %s matched' % (len(seeds), sum(d['located'] for d in diags), len(seeds), matched))
    verbose_display(result)
    return result
