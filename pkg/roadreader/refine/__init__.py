#!/usr/bin/env python
#############################################################
# road_reader/refine/__init__.py
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
import numpy as np

from roadreader import settings
from roadreader.debug import error, log, verbose_log, verbose_display, ConfigurationError
from roadreader.core.graph import road_graph, edge_key
from roadreader.core.geometry import intersection_point
from roadreader.refine import display
from roadreader.refine.crossings import find_crossings


class refine_params(object):
    """Overpass refinement settings

    Attributes:
    Float:tau          -- Intersection threshold.
    Float:gamma        -- Merge gap for stacked nodes.
    Float:step_scale   -- Move length per iteration.
    Int:max_iters      -- Iteration cap.
    Int:merge_period   -- Every merge_period-th iteration contracts.
    Float:tolerance    -- Smallest adjustment that moves a node.
    Float:overlap      -- A move may not land this close to another node.
    """

    def __init__(self, tau=None, gamma=None, step_scale=None, max_iters=None,
                 merge_period=None, tolerance=None, overlap=None):
        self.__name__ = 'Refine_Params'
        self.tau = settings.refine_tau if tau is None else tau
        self.gamma = settings.refine_gamma if gamma is None else gamma
        self.step_scale = settings.refine_alpha if step_scale is None else step_scale
        self.max_iters = settings.refine_max_iters if max_iters is None else max_iters
        self.merge_period = settings.refine_period if merge_period is None else merge_period
        self.tolerance = settings.refine_eps if tolerance is None else tolerance
        self.overlap = settings.refine_overlap if overlap is None else overlap
        self._check_errors()

    def __repr__(self):
        return 'Refine Params'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _check_errors(self):
        if self.tau <= 0:
            error(self, 'Fatal', 'tau must be > 0.', ConfigurationError)
        if self.step_scale <= 0:
            error(self, 'Fatal', 'step_scale must be > 0.', ConfigurationError)
        if self.max_iters < 1:
            error(self, 'Fatal', 'max_iters must be >= 1.', ConfigurationError)
        if self.merge_period < 1:
            error(self, 'Fatal', 'merge_period must be >= 1.', ConfigurationError)
        if self.tolerance <= 0:
            error(self, 'Fatal', 'tolerance must be > 0.', ConfigurationError)
        if self.gamma < 0 or self.overlap < 0:
            error(self, 'Fatal', 'gamma and overlap must be >= 0.', ConfigurationError)


class refine_result(object):
    """Outcome of refine_graph

    Attributes:
    Obj:graph         -- Refined road_graph.
    List:witnesses    -- Edge pairs still crossing at the end.
    Bool:converged    -- Stopped because nothing was left to move.
    Int:iterations    -- Iterations run.
    """

    def __init__(self, graph, witnesses, converged, iterations):
        self.__name__ = 'Refine_Result'
        self.graph = graph
        self.witnesses = witnesses
        self.converged = converged
        self.iterations = iterations

    def __repr__(self):
        return 'Refine Result'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _get_endpoints(self):
        """Four endpoint ids per remaining crossing."""
        return [(a, b, c, d) for (a, b), (c, d) in self.witnesses]
    endpoints = property(_get_endpoints)

    def display(self, tab=''):
        return display.refine_result(self, tab)


def _unit(dx, dy):
    n = math.hypot(dx, dy)
    if n == 0:
        return None
    return np.array([dx / n, dy / n])


def _push_direction(v, partner, crossing, pos, adj):
    """Unit push of v: along its non-partner road pointing most away from the crossing, else straight away."""
    vx, vy = pos[v]
    to_crossing = _unit(crossing[0] - vx, crossing[1] - vy)
    best, best_dot = None, None
    for n in sorted(adj[v]):
        if n == partner:
            continue
        u = _unit(pos[n][0] - vx, pos[n][1] - vy)
        if u is None:
            continue
        dot = 0.0 if to_crossing is None else float(u @ to_crossing)
        if best is None or dot < best_dot:
            best, best_dot = u, dot
    if best is not None:
        return best
    if to_crossing is not None:
        return -to_crossing
    away = _unit(vx - pos[partner][0], vy - pos[partner][1])
    return np.zeros(2) if away is None else away


def _overlaps(v, target, pos, radius):
    for n, (x, y) in pos.items():
        if n != v and math.hypot(x - target[0], y - target[1]) < radius:
            return True
    return False


def _contract(pos, adj, gamma):
    removed = 0
    for k in sorted(adj):
        if k not in adj or len(adj[k]) != 2:
            continue
        n1, n2 = sorted(adj[k])
        if math.hypot(pos[n1][0] - pos[n2][0], pos[n1][1] - pos[n2][1]) >= gamma:
            continue
        adj[n1].discard(k)
        adj[n2].discard(k)
        adj[n1].add(n2)
        adj[n2].add(n1)
        del adj[k]
        del pos[k]
        removed += 1
    return removed


def _graph(pos, adj):
    edges = sorted(set(edge_key(a, b) for a in adj for b in adj[a]))
    return road_graph([(n, x, y) for n, (x, y) in pos.items()], edges)


def refine_graph(g, p):
    """Push apart crossing roads and collapse stacked nodes

    Arguments:
    Obj:g       -- road_graph.
    Obj:p       -- refine_params.

    Returns:
    Obj         -- refine_result. Crossings left at the end are the
                   overpass witnesses. Hitting max_iters is reported
                   through converged, not raised.

    Each iteration rebuilds the adjustments from scratch. Endpoints
    closer than tau to a crossing point accumulate
    ((tau - d) / tau) * u. Every merge_period-th iteration contracts
    degree 2 nodes whose neighbours are closer than gamma; the others
    move every node with a large enough adjustment by step_scale.
    An iteration that finds no crossing ends the loop.
    """
    pos = dict((n, (x, y)) for n, x, y in g.nodes)
    adj = dict((n, set(g.neighbors(n))) for n in g.node_ids)
    current = g
    converged = False
    iterations = 0

    for t in range(1, p.max_iters + 1):
        iterations = t
        crossings = find_crossings(current)
        if not crossings:
            converged = True
            break

        delta = {}
        for (a, b), (c, d) in crossings:
            point = intersection_point(pos[a], pos[b], pos[c], pos[d])
            for v, partner in ((a, b), (b, a), (c, d), (d, c)):
                dist = math.hypot(pos[v][0] - point[0], pos[v][1] - point[1])
                if dist < p.tau:
                    u = _push_direction(v, partner, point, pos, adj)
                    delta[v] = delta.get(v, np.zeros(2)) + ((p.tau - dist) / p.tau) * u

        if t % p.merge_period == 0:
            removed = _contract(pos, adj, p.gamma)
            verbose_log(refine_graph, 'Iteration %s contracted %s nodes' % (t, removed))
        else:
            moved = 0
            for v in sorted(delta):
                norm = float(np.hypot(*delta[v]))
                if norm > p.tolerance:
                    step = delta[v] / norm * p.step_scale
                    target = (pos[v][0] + float(step[0]), pos[v][1] + float(step[1]))
                    if not _overlaps(v, target, pos, p.overlap):
                        pos[v] = target
                        moved += 1
            verbose_log(refine_graph, 'Iteration %s moved %s nodes' % (t, moved))
            if moved == 0:
                converged = True
                break

        current = _graph(pos, adj)

    result = refine_result(current, find_crossings(current), converged, iterations)
    log(refine_graph, '%s iterations, converged %s, %s crossings left'
        % (iterations, converged, len(result.witnesses)))
    verbose_display(result)
    return result


def witness_points(result):
    """Distinct (x, y) of the witness endpoints of a refine_result, by node id."""
    ids = sorted(set(n for quad in result.endpoints for n in quad))
    points = []
    for n in ids:
        xy = result.graph.position(n)
        if xy not in points:
            points.append(xy)
    return points


def overpass_points(g, p):
    """Positions of the endpoints of crossings that survive refinement

    Returns:
    List        -- (x, y) per distinct endpoint, ordered by node id.
    """
    return witness_points(refine_graph(g, p))
