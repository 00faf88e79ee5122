#!/usr/bin/env python
#############################################################
# road_reader/graphs/line.py
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

from itertools import combinations
import numpy as np

from roadreader.debug import verbose_log
from roadreader.core.graph import road_graph


class line_graph_view(object):
    """Line graph of a road graph

    Attributes:
    List:line_nodes   -- Source edges (i, j), i < j, sorted. Position in
                         this list is the line node index.
    List:line_edges   -- Index pairs (p, q), p < q, sorted. Adjacent iff
                         the source edges share an endpoint.
    Array:features    -- (optional) One row per line node.
    """

    def __init__(self, line_nodes, line_edges, features=None):
        self.__name__ = 'Line_Graph'
        self.line_nodes = list(line_nodes)
        self.line_edges = sorted(line_edges)
        self.features = features
        self._adj = [[] for _ in self.line_nodes]
        for p, q in self.line_edges:
            self._adj[p].append(q)
            self._adj[q].append(p)
        for nbrs in self._adj:
            nbrs.sort()

    def __repr__(self):
        return 'Line Graph: %s nodes, %s edges' % (len(self.line_nodes), len(self.line_edges))

    def __len__(self):
        return len(self.line_nodes)

    def neighbors(self, p):
        return self._adj[p]

    def _get_line_adj(self):
        return dict((p, list(nbrs)) for p, nbrs in enumerate(self._adj))
    line_adj = property(_get_line_adj)

    def with_features(self, features):
        return line_graph_view(self.line_nodes, self.line_edges, features)

    def permuted(self, order):
        """Same graph with line node order[k] moved to index k."""
        where = dict((old, new) for new, old in enumerate(order))
        edges = [tuple(sorted((where[p], where[q]))) for p, q in self.line_edges]
        features = None if self.features is None else np.asarray(self.features)[list(order)]
        return line_graph_view([self.line_nodes[o] for o in order], edges, features)

    def message_edges(self, self_loops=True):
        """Directed (dst, src) arrays sorted by dst then src."""
        pairs = [(p, q) for p, q in self.line_edges] + [(q, p) for p, q in self.line_edges]
        if self_loops:
            pairs += [(p, p) for p in range(len(self.line_nodes))]
        pairs.sort()
        if not pairs:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        dst, src = np.array(pairs, dtype=np.int64).T
        return dst, src

    def to_graph(self, g=None):
        """road_graph over line node indices, at edge midpoints of g."""
        nodes = []
        for p, (a, b) in enumerate(self.line_nodes):
            if g is None:
                nodes.append((p, float(p), 0.0))
            else:
                (ax, ay), (bx, by) = g.position(a), g.position(b)
                nodes.append((p, (ax + bx) / 2.0, (ay + by) / 2.0))
        return road_graph(nodes, self.line_edges)


def line_graph(g):
    """Line graph via incidence lists

    Arguments:
    Obj:g       -- road_graph.

    Returns:
    Obj         -- line_graph_view, one line node per edge of g ordered
                   by (min id, max id).
    """
    line_nodes = g.edges
    incident = {}
    for p, (a, b) in enumerate(line_nodes):
        incident.setdefault(a, []).append(p)
        incident.setdefault(b, []).append(p)

    line_edges = []
    for v in sorted(incident):
        line_edges.extend(combinations(incident[v], 2))

    verbose_log(line_graph, '%s line nodes, %s line edges' % (len(line_nodes), len(line_edges)))
    return line_graph_view(line_nodes, line_edges)
