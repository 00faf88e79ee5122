#!/usr/bin/env python
#############################################################
# road_reader/core/graph.py
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
import networkx as nx

from roadreader.debug import error, ValidationError
from roadreader.core import display


def edge_key(a, b):
    return (a, b) if a < b else (b, a)


class road_graph(object):
    """Undirected geometric graph

    Arguments:
    List:nodes        -- (id, x, y) tuples.
    List:edges        -- (id, id) pairs, any orientation.
    List:edge_probs   -- (optional) Probability per edge, aligned with edges.

    Attributes:
    List:nodes        -- (id, x, y) sorted by id.
    List:edges        -- (min id, max id) sorted.
    Dict:edge_probs   -- Edge key to probability, None if absent.

    Instances are not modified after construction, helpers that change
    the graph return a new one.
    """

    def __init__(self, nodes=(), edges=(), edge_probs=None):
        self.__name__ = 'Road_Graph'
        self._pos = {}
        self._adj = {}
        self._edges = set()
        self._edge_probs = None

        for node in nodes:
            nid, x, y = int(node[0]), float(node[1]), float(node[2])
            if nid in self._pos:
                error(self, 'Fatal', 'Duplicate node id %s.' % nid, ValidationError)
            if not (math.isfinite(x) and math.isfinite(y)):
                error(self, 'Fatal', 'Node %s has non-finite position.' % nid, ValidationError)
            self._pos[nid] = (x, y)
            self._adj[nid] = set()

        edges = list(edges)
        for a, b in edges:
            a, b = int(a), int(b)
            if a not in self._pos or b not in self._pos:
                error(self, 'Fatal', 'Edge (%s, %s) references a missing node.' % (a, b), ValidationError)
            if a == b:
                error(self, 'Fatal', 'Self loop on node %s.' % a, ValidationError)
            key = edge_key(a, b)
            if key in self._edges:
                error(self, 'Fatal', 'Duplicate edge (%s, %s).' % key, ValidationError)
            self._edges.add(key)
            self._adj[a].add(b)
            self._adj[b].add(a)

        if edge_probs is not None:
            edge_probs = list(edge_probs)
            if len(edge_probs) != len(edges):
                error(self, 'Fatal', 'edge_probs has %s entries for %s edges.' % (len(edge_probs), len(edges)), ValidationError)
            self._edge_probs = {}
            for (a, b), prob in zip(edges, edge_probs):
                prob = float(prob)
                if not 0.0 <= prob <= 1.0:
                    error(self, 'Fatal', 'Edge probability %s outside [0,1].' % prob, ValidationError)
                self._edge_probs[edge_key(int(a), int(b))] = prob

    def __repr__(self):
        return 'Road Graph: %s nodes, %s edges' % (len(self._pos), len(self._edges))

    def __len__(self):
        return len(self._pos)

    def __contains__(self, nid):
        return nid in self._pos

    def __eq__(self, other):
        if not isinstance(other, road_graph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def display(self, tab=''):
        return display.road_graph(self, tab)

    def _get_nodes(self):
        return [(nid, x, y) for nid, (x, y) in sorted(self._pos.items())]
    nodes = property(_get_nodes)

    def _get_node_ids(self):
        return sorted(self._pos)
    node_ids = property(_get_node_ids)

    def _get_edges(self):
        return sorted(self._edges)
    edges = property(_get_edges)

    def _get_edge_probs(self):
        return self._edge_probs
    edge_probs = property(_get_edge_probs)

    def number_of_edges(self):
        return len(self._edges)

    def has_edge(self, a, b):
        return edge_key(a, b) in self._edges

    def position(self, nid):
        return self._pos[nid]

    def neighbors(self, nid):
        return sorted(self._adj[nid])

    def degree(self, nid):
        return len(self._adj[nid])

    def edge_length(self, a, b):
        (ax, ay), (bx, by) = self._pos[a], self._pos[b]
        return math.hypot(bx - ax, by - ay)

    def max_id(self):
        return max(self._pos) if self._pos else -1

    def to_networkx(self):
        """networkx.Graph with pos node attributes and weight = length."""
        nxg = nx.Graph()
        for nid, pos in sorted(self._pos.items()):
            nxg.add_node(nid, pos=pos)
        for a, b in self.edges:
            nxg.add_edge(a, b, weight=self.edge_length(a, b))
        return nxg

    def subgraph(self, ids):
        ids = set(ids)
        return road_graph([n for n in self.nodes if n[0] in ids],
                          [e for e in self.edges if e[0] in ids and e[1] in ids])

    def with_positions(self, positions):
        """Copy with some node positions replaced.

        Arguments:
        Dict:positions -- Node id to (x, y).
        """
        nodes = [(nid, *positions.get(nid, (x, y))) for nid, x, y in self.nodes]
        return road_graph(nodes, self.edges)

    def with_edge_probs(self, probs):
        """Copy carrying probabilities.

        Arguments:
        Dict:probs -- Edge key to probability, one per edge.
        """
        edges = self.edges
        return road_graph(self.nodes, edges, [probs[e] for e in edges])


def trace_chains(g, anchors):
    """Split a graph into maximal polylines between anchor nodes.

    Arguments:
    Obj:g          -- road_graph.
    Set:anchors    -- Node ids that end a chain. Nodes of degree != 2
                      always end a chain.

    Returns:
    List           -- Node id lists [a, ..., b]. Interior ids have
                      degree 2. Cycles with no anchor start and end on
                      their lowest id.
    """
    stops = set(anchors) | set(n for n in g.node_ids if g.degree(n) != 2)
    walked = set()
    chains = []

    def walk(start, first):
        chain = [start, first]
        walked.add(edge_key(start, first))
        prev, cur = start, first
        while cur not in stops and cur != start:
            nxt = [n for n in g.neighbors(cur) if n != prev][0]
            walked.add(edge_key(cur, nxt))
            chain.append(nxt)
            prev, cur = cur, nxt
        return chain

    for start in sorted(stops):
        for nbr in g.neighbors(start):
            if edge_key(start, nbr) not in walked:
                chains.append(walk(start, nbr))

    # What is left are cycles without a stop node.
    for a, b in g.edges:
        if (a, b) in walked:
            continue
        stops.add(a)
        chains.append(walk(a, g.neighbors(a)[0]))

    return chains
