#!/usr/bin/env python
#############################################################
# road_reader/pipeline/render.py
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

import drawsvg as draw

from roadreader.debug import log
from roadreader.road_io import _open

NODE_RADIUS = 2
EDGE_WIDTH = 1
NODE_COLOR = '#1f4e9c'
EDGE_COLOR = '#222222'
RENDER_MARGIN = 8


def prob_color(prob):
    """Red at 0 to green at 1."""
    prob = min(1.0, max(0.0, float(prob)))
    return '#%02x%02x%02x' % (int(round(255 * (1.0 - prob))), int(round(200 * prob)), 0)


def drawing(g, size=None):
    """drawsvg Drawing of a road graph

    Arguments:
    Obj:g       -- road_graph.
    Tuple:size  -- (optional) (width, height), defaults to the node
                   extent plus a margin.

    Returns:
    Obj         -- draw.Drawing in image coordinates, y down.
    """
    if size is None:
        xs = [x for _, x, _ in g.nodes] or [0.0]
        ys = [y for _, _, y in g.nodes] or [0.0]
        size = (int(max(xs)) + RENDER_MARGIN, int(max(ys)) + RENDER_MARGIN)
    elif isinstance(size, int):
        size = (size, size)

    d = draw.Drawing(size[0], size[1])
    d.append(draw.Rectangle(0, 0, size[0], size[1], fill='white'))
    probs = g.edge_probs
    for a, b in g.edges:
        (ax, ay), (bx, by) = g.position(a), g.position(b)
        stroke = prob_color(probs[(a, b)]) if probs is not None else EDGE_COLOR
        d.append(draw.Line(ax, ay, bx, by, stroke=stroke, stroke_width=EDGE_WIDTH))
    for _, x, y in g.nodes:
        d.append(draw.Circle(x, y, NODE_RADIUS, fill=NODE_COLOR))
    return d


def render_svg(g, path, size=None):
    """Write g as SVG: nodes as 2 px circles, edges as 1 px strokes
    coloured by probability when the graph carries edge_probs."""
    svg = drawing(g, size).as_svg()
    with _open(path, 'w') as f:
        f.write(svg)
    log(render_svg, 'Rendered %s nodes, %s edges to %s' % (len(g), g.number_of_edges(), path))
    return path
