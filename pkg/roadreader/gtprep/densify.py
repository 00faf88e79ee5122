#!/usr/bin/env python
#############################################################
# road_reader/gtprep/densify.py
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

from roadreader import settings
from roadreader.debug import error, log, verbose_log, ConfigurationError
from roadreader.core.graph import road_graph, trace_chains, edge_key
from roadreader.core.geometry import polyline_length, point_along
from roadreader.gtprep.keypoints import detect_keypoints


class densify_params(object):
    """Node interpolation settings

    Attributes:
    Int:d_r        -- Road suppression radius, gaps fall in [d_r, 2*d_r-1].
    Int:rng_seed   -- Seed of the numpy PCG64 generator.
    """

    def __init__(self, d_r=None, rng_seed=0):
        self.__name__ = 'Densify_Params'
        self.d_r = settings.road_radius if d_r is None else d_r
        self.rng_seed = int(rng_seed)
        self._check_errors()

    def __repr__(self):
        return 'Densify Params'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _check_errors(self):
        if self.d_r < 2:
            error(self, 'Fatal', 'd_r must be >= 2, got %s.' % self.d_r, ConfigurationError)
        if self.rng_seed < 0 or self.rng_seed >= 2 ** 64:
            error(self, 'Fatal', 'Seed must be an unsigned 64-bit integer.', ConfigurationError)

    def rng(self):
        return np.random.default_rng(self.rng_seed)


def interpolate_distances(line_length, d_r, rng):
    """Random arc lengths for new nodes along a line

    Arguments:
    Float:line_length  -- Length L of the line.
    Int:d_r            -- Road suppression radius.
    Obj:rng            -- numpy Generator, advanced in place.

    Returns:
    List               -- Increasing distances. Steps u are drawn as
                          integers from [d_r, 2*d_r-1] while
                          p + 2*d_r - 1 < L and kept only when
                          p + u + d_r - 1 < L.
    """
    distances = []
    p = 0
    while p + 2 * d_r - 1 < line_length:
        u = int(rng.integers(d_r, 2 * d_r - 1, endpoint=True))
        if p + u + d_r - 1 < line_length:
            p += u
            distances.append(p)
    return distances


def _arcs(points):
    pts = np.asarray(points, dtype=np.float64)
    steps = np.diff(pts, axis=0)
    return np.concatenate([[0.0], np.cumsum(np.hypot(steps[:, 0], steps[:, 1]))])


def _assemble(g, chains, arcs, cuts, d_r, rng):
    """One re-sampling pass

    Every chain is split at its cut indices and each part is re-sampled
    on its own, in chain order.

    Returns:
    Tuple          -- (nodes, edges, owners). owners maps an emitted node
                      to the (chain, start, end, arc) parts it lies on.
    """
    nodes = {}
    edges = set()
    owners = {}
    next_id = g.max_id() + 1

    for ci, chain in enumerate(chains):
        points = [g.position(n) for n in chain]
        marks = sorted(cuts.get(ci, ()))
        bounds = [0] + marks + [len(chain) - 1]

        for s, e in zip(bounds, bounds[1:]):
            part = points[s:e + 1]
            distances = interpolate_distances(polyline_length(part), d_r, rng)

            if (chain[0] == chain[-1] and not marks and len(distances) < 2) or \
                    (not distances and e - s > 1 and edge_key(chain[s], chain[e]) in edges):
                # Too short to re-sample without a double edge.
                ids = chain[s:e + 1]
                for n in ids:
                    nodes[n] = g.position(n)
            else:
                ids = [chain[s]]
                for d, (x, y) in zip(distances, point_along(part, distances)):
                    nodes[next_id] = (float(x), float(y))
                    owners[next_id] = [(ci, s, e, arcs[ci][s] + d)]
                    ids.append(next_id)
                    next_id += 1
                ids.append(chain[e])

            for i in (s, e):
                nodes[chain[i]] = g.position(chain[i])
                owners.setdefault(chain[i], []).append((ci, s, e, arcs[ci][i]))
            edges.update(edge_key(a, b) for a, b in zip(ids, ids[1:]))

    return nodes, edges, owners


def densify(g, params):
    """Replace the interior of every keypoint-to-keypoint path

    Arguments:
    Obj:g        -- road_graph.
    Obj:params   -- densify_params.

    Returns:
    Obj          -- road_graph keeping keypoints and cycle anchors with
                    their ids; new nodes get ids from max id + 1 on.
                    The keypoint set of the result equals the input's.
                    When a pass changes the keypoint set, the original
                    interior node nearest each changed node is kept and
                    the pass runs again with the same seed.
    """
    keypoints = detect_keypoints(g)
    chains = trace_chains(g, keypoints)
    arcs = [_arcs([g.position(n) for n in chain]) for chain in chains]
    cuts = {}
    passes = 0

    while True:
        passes += 1
        nodes, edges, owners = _assemble(g, chains, arcs, cuts, params.d_r, params.rng())
        for n in keypoints:
            nodes[n] = g.position(n)
        out = road_graph([(n, x, y) for n, (x, y) in sorted(nodes.items())], sorted(edges))

        moved = detect_keypoints(out) ^ keypoints
        if not moved:
            break

        added = 0
        for n in sorted(moved):
            for ci, s, e, arc in owners.get(n, ()):
                taken = cuts.setdefault(ci, set())
                free = [i for i in range(s + 1, e) if i not in taken]
                if free:
                    taken.add(min(free, key=lambda i: (abs(arcs[ci][i] - arc), i)))
                    added += 1
        verbose_log(densify, 'Pass %s moved %s keypoints, %s new cuts' % (passes, len(moved), added))
        if not added:
            error(densify, 'Warn', 'Keypoint set changed at nodes %s, no node left to keep.' % sorted(moved))
            break

    verbose_log(densify, '%s chains, %s passes, %s -> %s nodes' % (len(chains), passes, len(g), len(out)))
    log(densify, 'Densified graph has %s nodes and %s edges' % (len(out), out.number_of_edges()))
    return out
