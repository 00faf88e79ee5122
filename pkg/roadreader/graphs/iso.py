#!/usr/bin/env python
#############################################################
# road_reader/graphs/iso.py
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
from networkx.algorithms.isomorphism import GraphMatcher

from roadreader import settings
from roadreader.debug import error, log, verbose_log, CapacityError
from roadreader.core.graph import road_graph
from roadreader.graphs.line import line_graph

# networkx ships every graph up to this many nodes.
ATLAS_MAX_NODES = 7


def _check_cap(obj, g, cap):
    cap = settings.oracle_node_cap if cap is None else cap
    if len(g) > cap:
        error(obj, 'Fatal', '%s nodes over the exhaustive search cap of %s.' % (len(g), cap), CapacityError)


def _marked(g, marks):
    nxg = nx.Graph()
    nxg.add_nodes_from((n, {'mark': n in marks}) for n in g.node_ids)
    nxg.add_edges_from(g.edges)
    return nxg


def _same_mark(a, b):
    return a['mark'] == b['mark']


def from_networkx(nxg):
    """road_graph of a networkx graph, nodes relabeled 0..n-1 in order."""
    order = sorted(nxg.nodes)
    index = dict((n, i) for i, n in enumerate(order))
    nodes = []
    for i, n in enumerate(order):
        x, y = nxg.nodes[n].get('pos', (float(i), 0.0))
        nodes.append((i, x, y))
    return road_graph(nodes, [(index[a], index[b]) for a, b in nxg.edges])


def isomorphic(g1, g2):
    """Exact isomorphism test of two road graphs, geometry ignored."""
    if len(g1) != len(g2) or g1.number_of_edges() != g2.number_of_edges():
        return False
    return GraphMatcher(_marked(g1, ()), _marked(g2, ())).is_isomorphic()


def automorphisms(g, cap=None):
    """Every adjacency preserving permutation of g, as dicts."""
    _check_cap(automorphisms, g, cap)
    nxg = _marked(g, ())
    return GraphMatcher(nxg, nxg).isomorphisms_iter()


def set_isomorphic(g, s, s2, cap=None):
    """True iff an automorphism of g maps node set s onto s2

    Arguments:
    Obj:g       -- road_graph, at most cap nodes.
    Set:s, s2   -- Node id sets.
    Int:cap     -- (optional) Node cap, default settings.oracle_node_cap.
    """
    _check_cap(set_isomorphic, g, cap)
    s, s2 = set(s), set(s2)
    if len(s) != len(s2):
        return False
    return GraphMatcher(_marked(g, s), _marked(g, s2), node_match=_same_mark).is_isomorphic()


def orbit_colors(g, cap=None):
    """Automorphism orbit of every node

    Returns:
    Dict        -- Node id to the smallest id in its orbit.
    """
    _check_cap(orbit_colors, g, cap)
    nxg = g.to_networkx()
    wl = nx.weisfeiler_lehman_subgraph_hashes(nxg, iterations=3)
    colors = {}
    for v in g.node_ids:
        if v in colors:
            continue
        colors[v] = v
        for w in g.node_ids:
            if w > v and w not in colors and wl[w] == wl[v] and g.degree(w) == g.degree(v):
                if set_isomorphic(g, {v}, {w}, cap=len(g)):
                    colors[w] = v
    return colors


def atlas_graphs(max_nodes):
    """Connected graphs with 1..max_nodes nodes, one per isomorphism class."""
    if max_nodes > ATLAS_MAX_NODES:
        error(atlas_graphs, 'Fatal', 'Graph atlas stops at %s nodes.' % ATLAS_MAX_NODES, CapacityError)
    return [from_networkx(G) for G in nx.graph_atlas_g()
            if 1 <= G.number_of_nodes() <= max_nodes and nx.is_connected(G)]


def _line_invariant(lg):
    if not len(lg):
        return (0, 0, '')
    return (len(lg), lg.number_of_edges(), nx.weisfeiler_lehman_graph_hash(lg.to_networkx()))


def whitney_check(max_nodes=6):
    """Pairs of connected graphs sharing a line graph

    Arguments:
    Int:max_nodes   -- Largest graph size, at most 7.

    Returns:
    List            -- (g1, g2) road_graph pairs that are not isomorphic
                       while their line graphs are. Only the triangle and
                       the 3-star are expected.
    """
    graphs = atlas_graphs(max_nodes)
    buckets = {}
    for g in graphs:
        lg = line_graph(g).to_graph()
        buckets.setdefault(_line_invariant(lg), []).append((g, lg))

    pairs = []
    for members in buckets.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                (g1, lg1), (g2, lg2) = members[i], members[j]
                if isomorphic(lg1, lg2) and not isomorphic(g1, g2):
                    pairs.append((g1, g2))

    log(whitney_check, '%s graphs, %s with shared line graphs' % (len(graphs), len(pairs)))
    return pairs


def is_triangle(g):
    return isomorphic(g, from_networkx(nx.complete_graph(3)))


def is_star(g):
    return isomorphic(g, from_networkx(nx.star_graph(3)))


def is_paw(g):
    paw = nx.complete_graph(3)
    paw.add_edge(2, 3)
    return isomorphic(g, from_networkx(paw))


def edge_orbit_violations(g, cap=None):
    """Edge pairs where line graph orbits and endpoint set orbits disagree."""
    edges = g.edges
    if not edges:
        return []
    cap = max(settings.oracle_node_cap, len(edges)) if cap is None else cap
    colors = orbit_colors(line_graph(g).to_graph(g), cap=cap)
    bad = []
    for p in range(len(edges)):
        for q in range(p + 1, len(edges)):
            same_orbit = colors[p] == colors[q]
            if same_orbit != set_isomorphic(g, edges[p], edges[q], cap=max(cap, len(g))):
                bad.append((edges[p], edges[q]))
    return bad


def edge_orbit_check(max_nodes=6):
    """Connected graphs whose line graph orbits do not match edge set orbits

    The triangle and the 3-star are skipped.

    Returns:
    List        -- (g, violating edge pairs) per failing graph.
    """
    failures = []
    for g in atlas_graphs(max_nodes):
        if is_triangle(g) or is_star(g):
            continue
        bad = edge_orbit_violations(g)
        if bad:
            verbose_log(edge_orbit_check, '%s: %s mismatched edge pairs' % (g, len(bad)))
            failures.append((g, bad))
    log(edge_orbit_check, '%s graphs with mismatched edge orbits' % len(failures))
    return failures


def prism_witness():
    """Triangular prism with one triangle edge and one rung

    Returns:
    Tuple       -- (road_graph, triangle edge, rung edge).
    """
    nodes = []
    for k in range(3):
        a = math.radians(90 + 120 * k)
        nodes.append((k, 100 + 80 * math.cos(a), 100 - 80 * math.sin(a)))
        nodes.append((k + 3, 100 + 30 * math.cos(a), 100 - 30 * math.sin(a)))
    nodes.sort()
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return road_graph(nodes, edges), (0, 1), (0, 3)


def prism_separation():
    """Orbit colours of the prism's triangle edge against its rung

    Returns:
    Tuple       -- (endpoint colours agree, line graph colours agree,
                   edges set-isomorphic). Aggregating endpoint orbits
                   cannot tell the two edges apart, line graph orbits
                   can, and no automorphism maps one onto the other.
    """
    g, tri, rung = prism_witness()
    colors = orbit_colors(g)
    endpoints_agree = sorted(colors[n] for n in tri) == sorted(colors[n] for n in rung)
    line_colors = orbit_colors(line_graph(g).to_graph(g))
    edges = g.edges
    line_agree = line_colors[edges.index(tri)] == line_colors[edges.index(rung)]
    return endpoints_agree, line_agree, set_isomorphic(g, tri, rung)
