#!/usr/bin/env python
#############################################################
# road_reader/pipeline/synth.py
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
from scipy.ndimage import gaussian_filter

from roadreader import settings
from roadreader.debug import error, log, verbose_display, ConfigurationError
from roadreader.core.geometry import point_segment_distance
from roadreader.core.graph import road_graph
from roadreader.core.grid import prob_grid, feature_grid, mask_bundle
from roadreader.gtprep.keypoints import detect_keypoints
from roadreader.gtprep.rasterize import rasterize_centerlines, rasterize_disks
from roadreader.refine import refine_params, overpass_points
from roadreader.pipeline.defines import *


class _builder(object):
    """Collects nodes keyed by pixel so crossing chains share intersections."""

    def __init__(self):
        self.ids = {}
        self.nodes = []
        self.edges = set()

    def node(self, x, y):
        x, y = math.floor(x) + 0.5, math.floor(y) + 0.5
        if (x, y) not in self.ids:
            self.ids[(x, y)] = len(self.nodes)
            self.nodes.append((len(self.nodes), x, y))
        return self.ids[(x, y)]

    def chain(self, points):
        ids = [self.node(x, y) for x, y in points]
        for a, b in zip(ids[:-1], ids[1:]):
            if a != b:
                self.edges.add((min(a, b), max(a, b)))
        return ids

    def graph(self):
        return road_graph(self.nodes, sorted(self.edges))


def chain_parts(length):
    """Edges a straight stretch of the given length is cut into."""
    return max(1, int(round(length / SYNTH_NODE_SPACING)))


def street_positions(rng, size, margin=SYNTH_MARGIN):
    """Integer street offsets along one axis

    The first street sits within 32 px past the margin, later ones follow
    at gaps drawn from SYNTH_STREET_GAP while they stay inside the margin.
    """
    lo, hi = SYNTH_STREET_GAP
    pos = margin + int(rng.integers(0, 32))
    out = []
    while pos <= size - margin:
        out.append(pos)
        pos += int(rng.integers(lo, hi, endpoint=True))
    return out


def _split(a, b):
    # Integer cut points from a to b inclusive.
    parts = chain_parts(b - a)
    return [a + int(math.floor(k * (b - a) / parts)) for k in range(parts + 1)]


def _grid_city(rng, size):
    xs = street_positions(rng, size)
    ys = street_positions(rng, size)
    b = _builder()
    for y in ys:
        for x0, x1 in zip(xs[:-1], xs[1:]):
            b.chain([(x, y) for x in _split(x0, x1)])
    for x in xs:
        for y0, y1 in zip(ys[:-1], ys[1:]):
            b.chain([(x, y) for y in _split(y0, y1)])
    return b.graph()


def _radial_city(rng, size):
    n = int(rng.integers(4, 6, endpoint=True))
    span = 2.0 * math.pi / n
    base = rng.uniform(0.0, span)
    ring = size * rng.uniform(0.25, 0.4)
    reach = 0.45 * size
    cx = cy = size // 2

    def at(r, theta):
        return cx + r * math.cos(theta), cy + r * math.sin(theta)

    b = _builder()
    junctions = []
    for k in range(n):
        theta = base + k * span
        inner, outer = chain_parts(ring), chain_parts(reach - ring)
        radii = [ring * i / inner for i in range(inner + 1)]
        radii += [ring + (reach - ring) * i / outer for i in range(1, outer + 1)]
        ids = b.chain([at(r, theta) for r in radii])
        junctions.append(ids[inner])

    parts = chain_parts(ring * span)
    for k in range(n):
        theta = base + k * span
        arc = [at(ring, theta + span * j / parts) for j in range(1, parts)]
        ids = [junctions[k]] + [b.node(x, y) for x, y in arc] + [junctions[(k + 1) % n]]
        for a, c in zip(ids[:-1], ids[1:]):
            if a != c:
                b.edges.add((min(a, c), max(a, c)))
    return b.graph()


def _clearance(p, polyline):
    point = np.atleast_2d(p)
    return min(float(point_segment_distance(point, a, b)[0]) for a, b in zip(polyline[:-1], polyline[1:]))


def _overpass_city(rng, size):
    rows = [int(size * 0.3) + int(rng.integers(0, 16)), int(size * 0.7) - int(rng.integers(0, 16))]
    x0, x1 = SYNTH_MARGIN, size - SYNTH_MARGIN
    start = np.array([x0, SYNTH_MARGIN + int(rng.integers(0, 32))], dtype=np.float64)
    end = np.array([x1, size - SYNTH_MARGIN - int(rng.integers(0, 32))], dtype=np.float64)
    direction = (end - start) / np.hypot(*(end - start))

    # Highway nodes stay off the road rows.
    parts = chain_parts(float(np.hypot(*(end - start))))
    highway = []
    for k in range(parts + 1):
        p = start + (end - start) * k / parts
        for row in rows:
            dy = p[1] - (row + 0.5)
            if abs(dy) < SYNTH_NUDGE_DIST:
                sign = 1.0 if dy * direction[1] >= 0 else -1.0
                p = p + sign * SYNTH_NUDGE * direction
        highway.append((math.floor(p[0]) + 0.5, math.floor(p[1]) + 0.5))

    # Road nodes stay off the highway.
    roads = []
    for row in rows:
        road = []
        for x in _split(x0, x1):
            p = np.array([x + 0.5, row + 0.5])
            if _clearance(p, highway) < SYNTH_NUDGE_DIST:
                options = [p + (SYNTH_NUDGE, 0.0), p - (SYNTH_NUDGE, 0.0)]
                p = max(options, key=lambda q: _clearance(q, highway))
            road.append((float(p[0]), float(p[1])))
        roads.append(road)

    b = _builder()
    for road in roads:
        b.chain(road)
    b.chain(highway)
    return b.graph()


_STYLES = {STYLE_GRID: _grid_city, STYLE_RADIAL: _radial_city, STYLE_OVERPASS: _overpass_city}


def _blur(values, sigma):
    if sigma <= 0:
        return np.asarray(values, dtype=np.float64)
    return gaussian_filter(np.asarray(values, dtype=np.float64), sigma, mode='constant')


def render_masks(gt, size, blur, noise, rng):
    """Soft road, keypoint and overpass masks for a scene graph

    Arguments:
    Obj:gt        -- road_graph.
    Int:size      -- Canvas side.
    Float:blur    -- Gaussian sigma, 0 keeps binary masks.
    Float:noise   -- Salt density on the centerline raster.
    Obj:rng       -- numpy Generator for the noise.

    Returns:
    Obj           -- mask_bundle. The road mask blends the blurred
                     centerline with bumps at every node so node pixels
                     are local maxima.
    """
    line = rasterize_centerlines(gt, size, size, settings.centerline_thickness).values.copy()
    if noise > 0:
        line[rng.random(line.shape) < noise] = 1.0
    road = SYNTH_LINE_WEIGHT * _blur(line, blur)
    bumps = _blur(rasterize_disks([gt.position(n) for n in gt.node_ids], SYNTH_NODE_RADIUS, size, size).values, blur)
    if bumps.max() > 0:
        road = road + SYNTH_NODE_WEIGHT * bumps / bumps.max()

    keypoints = [gt.position(n) for n in sorted(detect_keypoints(gt))]
    keypoint = _blur(rasterize_disks(keypoints, settings.disk_radius, size, size).values, blur)
    overpass = _blur(rasterize_disks(overpass_points(gt, refine_params()), settings.disk_radius, size, size).values, blur)
    return mask_bundle(prob_grid(np.clip(road, 0.0, 1.0)),
                       prob_grid(np.clip(keypoint, 0.0, 1.0)),
                       prob_grid(np.clip(overpass, 0.0, 1.0)))


def mask_features(bundle, downsample=None, depth=None):
    """Block means of the masks, zero padded to depth. Stands in for image features."""
    downsample = settings.downsample if downsample is None else downsample
    depth = settings.synth_depth if depth is None else depth
    h, w = bundle.shape
    if h % downsample or w % downsample:
        error(mask_features, 'Fatal', 'Canvas %sx%s not divisible by %s.' % (h, w, downsample), ConfigurationError)
    stack = np.stack([grid.values for _, grid in bundle], axis=-1)
    if depth < stack.shape[-1]:
        error(mask_features, 'Fatal', 'Depth %s below %s mask channels.' % (depth, stack.shape[-1]), ConfigurationError)
    blocks = stack.reshape(h // downsample, downsample, w // downsample, downsample, -1).mean(axis=(1, 3))
    pad = np.zeros(blocks.shape[:2] + (depth - blocks.shape[-1],))
    return feature_grid(np.concatenate([blocks, pad], axis=-1))


def synth_scene(seed, size, style, noise=0.0, blur=None):
    """Deterministic synthetic road scene

    Arguments:
    Int:seed      -- numpy PCG64 seed.
    Int:size      -- Canvas side, >= 256 and a multiple of the downsample.
    Str:style     -- One of STYLE_LIST.
    Float:noise   -- (optional) Salt noise density in [0,1].
    Float:blur    -- (optional) Gaussian sigma, settings.synth_blur.

    Returns:
    Tuple         -- (gt road_graph, mask_bundle, feature_grid). Graph
                     nodes sit at pixel centers.
    """
    blur = settings.synth_blur if blur is None else blur
    if style not in _STYLES:
        error(synth_scene, 'Fatal', 'Unknown style %r, expected one of %s.' % (style, STYLE_LIST), ConfigurationError)
    if size < SYNTH_MIN_SIZE:
        error(synth_scene, 'Fatal', 'Size must be >= %s, got %s.' % (SYNTH_MIN_SIZE, size), ConfigurationError)
    if not 0.0 <= noise <= 1.0:
        error(synth_scene, 'Fatal', 'Noise must be in [0,1].', ConfigurationError)

    rng = np.random.default_rng(seed)
    gt = _STYLES[style](rng, size)
    bundle = render_masks(gt, size, blur, noise, rng)
    features = mask_features(bundle)
    log(synth_scene, '%s scene %s px, seed %s: %s nodes, %s edges'
        % (style, size, seed, len(gt), gt.number_of_edges()))
    verbose_display(bundle)
    return gt, bundle, features
