#!/usr/bin/env python
#############################################################
# road_reader/gtprep/prepare.py
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
from scipy.spatial import cKDTree

from roadreader import settings
from roadreader.debug import log, verbose_log, verbose_display
from roadreader.core.graph import road_graph, edge_key
from roadreader.core.grid import mask_bundle
from roadreader.gtprep.keypoints import detect_keypoints
from roadreader.gtprep.rasterize import rasterize_centerlines, rasterize_disks
from roadreader.gtprep.densify import densify
from roadreader.gtprep.label import label_candidates
from roadreader.refine import refine_graph, witness_points


class preprocess_result(object):
    """Training targets built from one ground truth graph

    Attributes:
    Obj:dense          -- Densified road_graph.
    Obj:thinned        -- dense after vertex suppression.
    Obj:graph          -- Graph the targets are drawn from, refined
                          unless refinement was switched off.
    Obj:refined        -- refine_result or None.
    List:keypoints     -- Keypoint ids of the input graph.
    List:overpass      -- Overpass (x, y) points.
    Obj:masks          -- mask_bundle.
    Obj:candidates     -- Labeled candidate_set.
    """

    def __init__(self, dense, thinned, refined, keypoints, overpass, masks, candidates):
        self.__name__ = 'Preprocess_Result'
        self.dense = dense
        self.thinned = thinned
        self.refined = refined
        self.graph = refined.graph if refined is not None else thinned
        self.keypoints = keypoints
        self.overpass = overpass
        self.masks = masks
        self.candidates = candidates

    def __repr__(self):
        return 'Preprocess Result'

    def display(self, tab=''):
        buf = '%s%s\n' % (tab, self)
        buf += '%s---------------------\n' % (tab)
        buf += '\t%sKeypoints: %s\n' % (tab, len(self.keypoints))
        buf += '\t%sDense Nodes: %s\n' % (tab, len(self.dense))
        buf += '\t%sThinned Nodes: %s\n' % (tab, len(self.thinned))
        buf += '\t%sOverpass Points: %s\n' % (tab, len(self.overpass))
        buf += '\t%sCandidates: %s\n' % (tab, len(self.candidates))
        return buf


def thin_vertices(g, priority, d_r):
    """Suppress degree 2 vertices crowding a priority vertex or each other

    Arguments:
    Obj:g          -- road_graph.
    Set:priority   -- Ids that always stay.
    Float:d_r      -- Suppression radius.

    Returns:
    Obj            -- road_graph. Vertices closer than d_r to a priority
                      vertex are dropped first, the rest are suppressed
                      greedily at d_r in id order. A dropped vertex is
                      contracted, its two neighbours get joined.
    """
    pos = dict((n, g.position(n)) for n in g.node_ids)
    adj = dict((n, set(g.neighbors(n))) for n in g.node_ids)
    loose = [n for n in g.node_ids if n not in priority and g.degree(n) == 2]
    if not loose:
        return g

    xy = np.array([pos[n] for n in loose])
    drop = np.zeros(len(loose), dtype=bool)
    anchors = [pos[n] for n in sorted(priority) if n in pos]
    if anchors:
        dist, _ = cKDTree(anchors).query(xy, k=1)
        drop = dist < d_r

    tree = cKDTree(xy)
    for i in range(len(loose)):
        if drop[i]:
            continue
        for j in tree.query_ball_point(xy[i], d_r):
            if j > i and np.hypot(*(xy[j] - xy[i])) < d_r:
                drop[j] = True

    removed = 0
    for i in np.flatnonzero(drop).tolist():
        k = loose[i]
        if len(adj[k]) != 2:
            continue
        n1, n2 = sorted(adj[k])
        adj[n1].discard(k)
        adj[n2].discard(k)
        adj[n1].add(n2)
        adj[n2].add(n1)
        del adj[k]
        del pos[k]
        removed += 1

    verbose_log(thin_vertices, 'Suppressed %s of %s degree 2 vertices' % (removed, len(loose)))
    edges = sorted(set(edge_key(a, b) for a in adj for b in adj[a]))
    return road_graph([(n, x, y) for n, (x, y) in sorted(pos.items())], edges)


def preprocess_graph(g, h, w, densify_cfg, refine_cfg=None, d_nei=None,
                     thickness=None, disk_radius=None):
    """Ground truth graph to masks and labeled candidate edges

    Arguments:
    Obj:g             -- road_graph in canvas pixels.
    Int:h,w           -- Canvas size.
    Obj:densify_cfg   -- densify_params, its d_r also thins the vertices.
    Obj:refine_cfg    -- (optional) refine_params, None skips refinement.
    Float:d_nei       -- (optional) Candidate radius.
    Float:thickness   -- (optional) Road stroke width.
    Float:disk_radius -- (optional) Keypoint and overpass disk radius.

    Returns:
    Obj               -- preprocess_result.
    """
    d_nei = settings.neighbor_radius if d_nei is None else d_nei
    thickness = settings.centerline_thickness if thickness is None else thickness
    disk_radius = settings.disk_radius if disk_radius is None else disk_radius

    keypoints = sorted(detect_keypoints(g))
    dense = densify(g, densify_cfg)
    thinned = thin_vertices(dense, set(keypoints), densify_cfg.d_r)

    refined = None
    overpass = []
    if refine_cfg is not None:
        refined = refine_graph(thinned, refine_cfg)
        overpass = witness_points(refined)
    target = refined.graph if refined is not None else thinned

    masks = mask_bundle(rasterize_centerlines(target, h, w, thickness),
                        rasterize_disks([g.position(n) for n in keypoints], disk_radius, h, w),
                        rasterize_disks(overpass, disk_radius, h, w))
    candidates = label_candidates(target, d_nei)

    result = preprocess_result(dense, thinned, refined, keypoints, overpass, masks, candidates)
    log(preprocess_graph, 'Prepared %s candidates from %s nodes' % (len(candidates), len(g)))
    verbose_display(result)
    return result
