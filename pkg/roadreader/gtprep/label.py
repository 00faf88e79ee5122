#!/usr/bin/env python
#############################################################
# road_reader/gtprep/label.py
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

from roadreader.debug import error, log
from roadreader.core.candidates import candidate_set
from roadreader.graphs.euclid import neighbor_pairs


def label_candidates(dense_gt, d_nei):
    """Candidate edges of a ground truth graph with their labels

    Arguments:
    Obj:dense_gt   -- Densified (and optionally refined) road_graph.
    Float:d_nei    -- Neighbourhood radius.

    Returns:
    Obj            -- candidate_set over every node pair within d_nei,
                      label 1 iff the pair is an edge of dense_gt.
    """
    nodes = dense_gt.nodes
    ids = [n[0] for n in nodes]
    pairs = [(ids[i], ids[j]) for i, j in neighbor_pairs([(x, y) for _, x, y in nodes], d_nei)]
    labels = [1 if dense_gt.has_edge(a, b) else 0 for a, b in pairs]

    for a, b in dense_gt.edges:
        length = dense_gt.edge_length(a, b)
        if length > d_nei:
            error(label_candidates, 'Warn', 'Edge (%s, %s) of length %.1f exceeds d_nei %s, no candidate.'
                  % (a, b, length, d_nei))

    log(label_candidates, '%s candidate pairs, %s positive' % (len(pairs), sum(labels)))
    return candidate_set(nodes, pairs, d_nei, labels=labels)
