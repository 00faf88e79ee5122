#!/usr/bin/env python
#############################################################
# road_reader/road_io.py
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

import json
import struct
import numpy as np

from roadreader.debug import error, log, FormatError, InputError
from roadreader.core.defines import (FMAP_MAGIC, FMAP_HDR_FORMAT, FMAP_HDR_FIELDS, FMAP_HDR_SZ,
                                     FMAP_VALUE_DTYPE, PGM_MAGIC, PGM_MAXVAL, SOURCE_LIST)
from roadreader.core.graph import road_graph
from roadreader.core.grid import prob_grid, feature_grid
from roadreader.core.candidates import candidate_set, scored_point


def _open(path, mode):
    try:
        return open(path, mode)
    except OSError as e:
        error(_open, 'Fatal', '%s: %s' % (path, e.strerror), InputError)


def read_json(path):
    """Parse a JSON file, syntax errors carry line and column."""
    with _open(path, 'r') as f:
        text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        error(read_json, 'Fatal', '%s line %s column %s: %s' % (path, e.lineno, e.colno, e.msg), FormatError)


def write_json(obj, path):
    with _open(path, 'w') as f:
        json.dump(obj, f, indent=1)
        f.write('\n')


def _field(doc, key, where, kind):
    if not isinstance(doc, dict) or key not in doc:
        error(_field, 'Fatal', '%s: missing field %r.' % (where, key), FormatError)
    value = doc[key]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, kind) or isinstance(value, bool):
        error(_field, 'Fatal', '%s.%s: expected %s, got %r.' % (where, key, kind.__name__, value), FormatError)
    return value


def _pair(value, where):
    if (not isinstance(value, list) or len(value) != 2 or
            not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        error(_pair, 'Fatal', '%s: expected [int, int], got %r.' % (where, value), FormatError)
    return (value[0], value[1])


def graph_from_json(doc, where='graph'):
    nodes = []
    for i, node in enumerate(_field(doc, 'nodes', where, list)):
        at = '%s.nodes[%s]' % (where, i)
        nodes.append((_field(node, 'id', at, int), _field(node, 'x', at, float), _field(node, 'y', at, float)))
    edges = [_pair(e, '%s.edges[%s]' % (where, i)) for i, e in enumerate(_field(doc, 'edges', where, list))]
    probs = None
    if doc.get('edge_probs') is not None:
        probs = _field(doc, 'edge_probs', where, list)
    return road_graph(nodes, edges, probs)


def graph_to_json(g):
    doc = {'nodes': [{'id': nid, 'x': x, 'y': y} for nid, x, y in g.nodes],
           'edges': [[a, b] for a, b in g.edges]}
    if g.edge_probs is not None:
        doc['edge_probs'] = [g.edge_probs[e] for e in g.edges]
    return doc


def read_graph(path):
    """Load a road graph

    Arguments:
    Str:path    -- Graph JSON file.

    Returns:
    Obj         -- road_graph.
    """
    log(read_graph, 'Reading graph %s' % path)
    return graph_from_json(read_json(path), path)


def write_graph(g, path):
    log(write_graph, 'Writing graph %s' % path)
    write_json(graph_to_json(g), path)


def _pgm_token(buf, pos):
    # Skip whitespace and comment lines between header tokens.
    while pos < len(buf):
        if buf[pos:pos + 1].isspace():
            pos += 1
        elif buf[pos:pos + 1] == b'#':
            while pos < len(buf) and buf[pos:pos + 1] not in (b'\n', b'\r'):
                pos += 1
        else:
            break
    start = pos
    while pos < len(buf) and not buf[pos:pos + 1].isspace():
        pos += 1
    return buf[start:pos], pos


def read_grid(path):
    """Load a probability grid from an 8-bit binary PGM

    Arguments:
    Str:path    -- PGM file, magic P5, maxval 255.

    Returns:
    Obj         -- prob_grid with values v/255.
    """
    with _open(path, 'rb') as f:
        buf = f.read()

    if buf[:2] != PGM_MAGIC:
        error(read_grid, 'Fatal', '%s: bad magic %r, expected P5.' % (path, buf[:2]), FormatError)

    pos = 2
    header = []
    for name in ('width', 'height', 'maxval'):
        token, pos = _pgm_token(buf, pos)
        if not token.isdigit():
            error(read_grid, 'Fatal', '%s: bad PGM %s %r.' % (path, name, token), FormatError)
        header.append(int(token))
    width, height, maxval = header
    if maxval != PGM_MAXVAL:
        error(read_grid, 'Fatal', '%s: maxval %s, only %s supported.' % (path, maxval, PGM_MAXVAL), FormatError)

    # Exactly one whitespace byte ends the header.
    payload = buf[pos + 1:]
    if len(payload) < width * height:
        error(read_grid, 'Fatal', '%s: truncated payload, %s of %s bytes.' % (path, len(payload), width * height), FormatError)

    data = np.frombuffer(payload, dtype=np.uint8, count=width * height).reshape(height, width)
    log(read_grid, 'Read %sx%s grid %s' % (height, width, path))
    return prob_grid(data / float(PGM_MAXVAL))


def quantize(grid):
    return np.rint(np.asarray(grid.values) * PGM_MAXVAL).astype(np.uint8)


def write_grid(grid, path):
    with _open(path, 'wb') as f:
        f.write(b'P5\n%d %d\n%d\n' % (grid.width, grid.height, PGM_MAXVAL))
        f.write(quantize(grid).tobytes())
    log(write_grid, 'Wrote %sx%s grid %s' % (grid.height, grid.width, path))


def read_features(path):
    """Load a feature map

    Arguments:
    Str:path    -- FMAP file: magic, gh, gw, depth as little-endian
                   uint32, then gh*gw*depth little-endian float32.

    Returns:
    Obj         -- feature_grid.
    """
    with _open(path, 'rb') as f:
        buf = f.read()

    if len(buf) < FMAP_HDR_SZ:
        error(read_features, 'Fatal', '%s: file shorter than header.' % path, FormatError)
    hdr = dict(zip(FMAP_HDR_FIELDS, struct.unpack(FMAP_HDR_FORMAT, buf[:FMAP_HDR_SZ])))
    if hdr['magic'] != FMAP_MAGIC:
        error(read_features, 'Fatal', '%s: bad magic %r.' % (path, hdr['magic']), FormatError)

    count = hdr['gh'] * hdr['gw'] * hdr['depth']
    payload = buf[FMAP_HDR_SZ:]
    if len(payload) != count * 4:
        error(read_features, 'Fatal', '%s: size mismatch, header says %s floats, payload holds %s bytes.'
              % (path, count, len(payload)), FormatError)

    values = np.frombuffer(payload, dtype=FMAP_VALUE_DTYPE).reshape(hdr['gh'], hdr['gw'], hdr['depth'])
    log(read_features, 'Read %sx%sx%s features %s' % (hdr['gh'], hdr['gw'], hdr['depth'], path))
    return feature_grid(values)


def write_features(grid, path):
    with _open(path, 'wb') as f:
        f.write(struct.pack(FMAP_HDR_FORMAT, FMAP_MAGIC, grid.gh, grid.gw, grid.depth))
        f.write(np.ascontiguousarray(grid.values, dtype=FMAP_VALUE_DTYPE).tobytes())


def read_candidates(path):
    doc = read_json(path)
    vertices = []
    for i, v in enumerate(_field(doc, 'vertices', path, list)):
        at = '%s.vertices[%s]' % (path, i)
        vertices.append((_field(v, 'id', at, int), _field(v, 'x', at, float), _field(v, 'y', at, float)))
    pairs = [_pair(p, '%s.pairs[%s]' % (path, i)) for i, p in enumerate(_field(doc, 'pairs', path, list))]
    return candidate_set(vertices, pairs, _field(doc, 'd_nei', path, float), doc.get('labels'), doc.get('probs'))


def write_candidates(cands, path):
    write_json({'d_nei': cands.d_nei,
                'vertices': [{'id': vid, 'x': x, 'y': y} for vid, x, y in cands.vertices],
                'pairs': [[a, b] for a, b in cands.pairs],
                'labels': cands.labels,
                'probs': cands.probs}, path)


def read_vertices(path):
    doc = read_json(path)
    points = []
    for i, v in enumerate(_field(doc, 'vertices', path, list)):
        at = '%s.vertices[%s]' % (path, i)
        source = _field(v, 'source', at, str)
        if source not in SOURCE_LIST:
            error(read_vertices, 'Fatal', '%s.source: unknown mask %r.' % (at, source), FormatError)
        points.append(scored_point(_field(v, 'x', at, int), _field(v, 'y', at, int),
                                   _field(v, 'score', at, float), source))
    return points


def write_vertices(points, path):
    write_json({'vertices': [{'x': p.x, 'y': p.y, 'score': p.score, 'source': p.source} for p in points]}, path)
