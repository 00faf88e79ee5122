#!/usr/bin/env python
#############################################################
# road_reader/metrics/apls.py
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

from concurrent.futures import ThreadPoolExecutor

import networkx as nx
import numpy as np

from roadreader import settings
from roadreader.debug import error, log, verbose_display, ConfigurationError
from roadreader.core.geometry import nearest_on_segments, point_along
from roadreader.core.graph import road_graph, trace_chains
from roadreader.metrics import display
from roadreader.metrics.defines import SNAP_END_TOL


class apls_params(object):
    """APLS settings, pixels

    Attributes:
    Float:control_interval  -- Arc length between injected control nodes.
    Float:snap_radius       -- Largest distance a control node snaps over.
    """

    def __init__(self, control_interval=None, snap_radius=None):
        self.__name__ = 'Apls_Params'
        self.control_interval = settings.apls_control_interval if control_interval is None else control_interval
        self.snap_radius = settings.apls_snap_radius if snap_radius is None else snap_radius
        self._check_errors()

    def __repr__(self):
        return 'Apls Params'

    def __iter__(self):
        yield 'control_interval', self.control_interval
        yield 'snap_radius', self.snap_radius

    def _check_errors(self):
        if self.control_interval <= 0:
            error(self, 'Fatal', 'control_interval must be > 0.', ConfigurationError)
        if self.snap_radius <= 0:
            error(self, 'Fatal', 'snap_radius must be > 0.', ConfigurationError)


class apls_result(object):
    """APLS score and the two directional mean costs

    Attributes:
    Float:score        -- 1 - mean of the two directional costs.
    Float:gt_to_prop   -- Mean cost with ground truth as source.
    Float:prop_to_gt   -- Mean cost with the proposal as source.
    Dict:pairs         -- Scored pair count per direction.
    Dict:unsnapped     -- Control nodes left unsnapped per direction.
    """

    def __init__(self, score, gt_to_prop=0.0, prop_to_gt=0.0, pairs=None, unsnapped=None):
        self.__name__ = 'Apls_Result'
        self.score = score
        self.gt_to_prop = gt_to_prop
        self.prop_to_gt = prop_to_gt
        self.pairs = pairs or {}
        self.unsnapped = unsnapped or {}

    def __repr__(self):
        return 'Apls Result: %.4f' % self.score

    def __float__(self):
        return float(self.score)

    def __iter__(self):
        yield 'apls', self.score
        yield 'apls_gt_to_prop', self.gt_to_prop
        yield 'apls_prop_to_gt', self.prop_to_gt

    def display(self, tab=''):
        return display.apls_result(self, tab)


def inject_controls(g, interval):
    """Copy of g with a node every interval of arc length along each chain

    New ids continue after g.max_id(). Positions that fall on an
    existing node add nothing.
    """
    next_id = g.max_id() + 1
    nodes = list(g.nodes)
    edges = []
    for chain in trace_chains(g, set()):
        points = np.array([g.position(n) for n in chain])
        steps = np.hypot(*np.diff(points, axis=0).T)
        cum = np.concatenate([[0.0], np.cumsum(steps)])
        marks = np.arange(interval, cum[-1], interval)
        for i, (a, b) in enumerate(zip(chain[:-1], chain[1:])):
            inside = marks[(marks > cum[i]) & (marks < cum[i + 1])]
            ids = [a]
            for (x, y) in point_along(points, inside):
                nodes.append((next_id, float(x), float(y)))
                ids.append(next_id)
                next_id += 1
            ids.append(b)
            edges.extend(zip(ids[:-1], ids[1:]))
    return road_graph(nodes, edges)


def snap_controls(points, g, radius):
    """Attach points to g

    Arguments:
    List:points   -- (x, y) control positions.
    Obj:g         -- road_graph to snap onto.
    Float:radius  -- Largest snap distance.

    Returns:
    Tuple         -- (road_graph with split nodes added, node id or None
                     per point). Each point goes to the nearest edge
                     projection or isolated node, edges winning ties.
                     Projections at an edge end reuse the end node.
    """
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    n = len(points)
    edges = g.edges
    best = np.full(n, np.inf)
    edge_of = np.full(n, -1)
    t_of = np.zeros(n)
    if edges:
        starts = np.array([g.position(a) for a, _ in edges])
        ends = np.array([g.position(b) for _, b in edges])
        edge_of, t_of, best = nearest_on_segments(points, starts, ends)

    snaps = [None] * n
    isolated = [nid for nid in g.node_ids if g.degree(nid) == 0]
    if isolated and n:
        where = np.array([g.position(nid) for nid in isolated])
        dist = np.hypot(points[:, None, 0] - where[None, :, 0], points[:, None, 1] - where[None, :, 1])
        nearest = np.argmin(dist, axis=1)
        for i in range(n):
            if dist[i, nearest[i]] < best[i] and dist[i, nearest[i]] <= radius:
                snaps[i] = isolated[nearest[i]]

    splits = {}
    for i in range(n):
        if snaps[i] is not None or best[i] > radius:
            continue
        a, b = edges[edge_of[i]]
        if t_of[i] <= SNAP_END_TOL:
            snaps[i] = a
        elif t_of[i] >= 1.0 - SNAP_END_TOL:
            snaps[i] = b
        else:
            splits.setdefault(int(edge_of[i]), []).append((float(t_of[i]), i))

    next_id = g.max_id() + 1
    nodes = list(g.nodes)
    kept = []
    for k, (a, b) in enumerate(edges):
        if k not in splits:
            kept.append((a, b))
            continue
        (ax, ay), (bx, by) = g.position(a), g.position(b)
        ids = [a]
        for t in sorted(set(t for t, _ in splits[k])):
            nodes.append((next_id, ax + (bx - ax) * t, ay + (by - ay) * t))
            for tt, i in splits[k]:
                if tt == t:
                    snaps[i] = next_id
            ids.append(next_id)
            next_id += 1
        ids.append(b)
        kept.extend(zip(ids[:-1], ids[1:]))
    return road_graph(nodes, kept), snaps


def path_cost(length_src, length_tgt):
    """min(1, |L - L'| / L), 1 when the target path is missing."""
    if length_tgt is None:
        return 1.0
    return min(1.0, abs(length_src - length_tgt) / length_src)


def directional_cost(src, tgt, p):
    """Mean path cost with src as the reference

    Returns:
    Tuple       -- (mean cost, scored pairs, unsnapped controls). Pairs
                   without a source path are skipped; no pairs cost 0.
    """
    src = inject_controls(src, p.control_interval)
    tgt = inject_controls(tgt, p.control_interval)
    controls = src.node_ids
    tgt, snaps = snap_controls([src.position(n) for n in controls], tgt, p.snap_radius)
    snap = dict(zip(controls, snaps))
    snx, tnx = src.to_networkx(), tgt.to_networkx()

    def one(a):
        lengths = nx.single_source_dijkstra_path_length(snx, a, weight='weight')
        reached = {}
        if snap[a] is not None:
            reached = nx.single_source_dijkstra_path_length(tnx, snap[a], weight='weight')
        total, count = 0.0, 0
        for b in controls:
            if b <= a or b not in lengths or lengths[b] <= 0:
                continue
            if snap[a] is None or snap[b] is None:
                total += 1.0
            else:
                total += path_cost(lengths[b], reached.get(snap[b]))
            count += 1
        return total, count

    with ThreadPoolExecutor(max_workers=max(1, settings.threads)) as pool:
        parts = list(pool.map(one, controls))
    total = sum(t for t, _ in parts)
    count = sum(c for _, c in parts)
    unsnapped = sum(1 for s in snaps if s is None)
    return (total / count if count else 0.0), count, unsnapped


def apls(gt, prop, p=None):
    """APLS between two graphs in the same frame

    Arguments:
    Obj:gt      -- Ground truth road_graph.
    Obj:prop    -- Proposal road_graph.
    Obj:p       -- (optional) apls_params.

    Returns:
    Obj         -- apls_result. Both graphs empty score 1, exactly one
                   empty scores 0.
    """
    p = apls_params() if p is None else p
    if not len(gt) and not len(prop):
        return apls_result(1.0)
    if not len(gt) or not len(prop):
        return apls_result(0.0)

    forward, n_fwd, miss_fwd = directional_cost(gt, prop, p)
    backward, n_bwd, miss_bwd = directional_cost(prop, gt, p)
    score = 1.0 - (forward + backward) / 2.0
    result = apls_result(score, forward, backward,
                         {'gt_to_prop': n_fwd, 'prop_to_gt': n_bwd},
                         {'gt_to_prop': miss_fwd, 'prop_to_gt': miss_bwd})
    log(apls, 'APLS %.4f from %s + %s pairs' % (score, n_fwd, n_bwd))
    verbose_display(result)
    return result
