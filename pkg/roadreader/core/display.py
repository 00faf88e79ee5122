#!/usr/bin/env python
#############################################################
# road_reader/core/display.py
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

def road_graph(graph, tab=''):
    buf = '%s%s\n' % (tab, graph)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sNodes: %s\n' % (tab, len(graph))
    buf += '\t%sEdges: %s\n' % (tab, graph.number_of_edges())
    if len(graph):
        xs = [x for _, x, _ in graph.nodes]
        ys = [y for _, _, y in graph.nodes]
        buf += '\t%sExtent: (%.1f, %.1f) - (%.1f, %.1f)\n' % (tab, min(xs), min(ys), max(xs), max(ys))
    buf += '\t%sEdge Probs: %s\n' % (tab, graph.edge_probs is not None)
    return buf


def prob_grid(grid, tab=''):
    buf = '%s%s\n' % (tab, grid)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sMin: %.4f\n' % (tab, grid.values.min())
    buf += '\t%sMax: %.4f\n' % (tab, grid.values.max())
    buf += '\t%sMean: %.4f\n' % (tab, grid.values.mean())
    return buf


def feature_grid(grid, tab=''):
    buf = '%s%s\n' % (tab, grid)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sCells: %s\n' % (tab, grid.gh * grid.gw)
    buf += '\t%sDepth: %s\n' % (tab, grid.depth)
    return buf


def mask_bundle(bundle, tab=''):
    buf = '%s%s\n' % (tab, bundle)
    buf += '%s---------------------\n' % (tab)
    for name, grid in bundle:
        buf += '\t%s%s above 0.5: %s\n' % (tab, name.capitalize(), int((grid.values > 0.5).sum()))
    return buf


def candidate_set(cands, tab=''):
    buf = '%s%s\n' % (tab, cands)
    buf += '%s---------------------\n' % (tab)
    buf += '\t%sd_nei: %s\n' % (tab, cands.d_nei)
    if cands.labels is not None:
        buf += '\t%sPositive Labels: %s\n' % (tab, sum(cands.labels))
    if cands.probs is not None and len(cands):
        buf += '\t%sMean Prob: %.4f\n' % (tab, sum(cands.probs) / len(cands))
    return buf
