#!/usr/bin/env python
#############################################################
# road_reader/tests/test_road_io.py
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
import pytest

from roadreader.debug import FormatError, InputError, ValidationError
from roadreader.core.candidates import candidate_set, scored_point
from roadreader.core.graph import road_graph
from roadreader.core.grid import feature_grid
from roadreader import road_io


def _write_pgm(path, w, h, payload, maxval=255, magic=b'P5'):
    path.write_bytes(magic + b'\n%d %d\n%d\n' % (w, h, maxval) + bytes(payload))
    return str(path)


def test_read_graph_example(tmp_path):
    path = tmp_path / 'g.json'
    path.write_text(json.dumps({'nodes': [{'id': 0, 'x': 1.5, 'y': 2.5}, {'id': 1, 'x': 3, 'y': 4}],
                                'edges': [[0, 1]]}))
    g = road_io.read_graph(str(path))
    assert g.nodes == [(0, 1.5, 2.5), (1, 3.0, 4.0)]
    assert g.edges == [(0, 1)]
    assert g.edge_probs is None


def test_read_empty_graph(tmp_path):
    path = tmp_path / 'g.json'
    path.write_text('{"nodes": [], "edges": []}')
    g = road_io.read_graph(str(path))
    assert len(g) == 0 and g.number_of_edges() == 0


def test_graph_round_trip_large(tmp_path):
    rng = np.random.default_rng(11)
    nodes = [(int(i), float(x), float(y)) for i, (x, y) in zip(rng.permutation(1000), rng.uniform(0, 2048, (1000, 2)))]
    pairs = set()
    while len(pairs) < 1500:
        a, b = (int(v) for v in rng.integers(0, 1000, 2))
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    edges = sorted(pairs)
    g = road_graph(nodes, edges, rng.uniform(0, 1, len(edges)))

    path = str(tmp_path / 'g.json')
    road_io.write_graph(g, path)
    back = road_io.read_graph(path)
    assert back == g
    assert back.edge_probs == g.edge_probs


@pytest.mark.parametrize('text, where', [
    ('{"nodes": [{"id": 0, "x": 1}], "edges": []}', "'y'"),
    ('{"nodes": [], "edges": [[0]]}', 'edges[0]'),
    ('{"nodes": [{"id": "a", "x": 1, "y": 2}], "edges": []}', 'nodes[0].id'),
    ('{"nodes": [],\n "edges": [}', 'line 2'),
])
def test_malformed_graph_names_the_field(tmp_path, text, where):
    path = tmp_path / 'bad.json'
    path.write_text(text)
    with pytest.raises(FormatError, match=where.replace('[', r'\[').replace(']', r'\]')):
        road_io.read_graph(str(path))


def test_duplicate_node_is_validation_error(tmp_path):
    path = tmp_path / 'dup.json'
    path.write_text('{"nodes": [{"id": 0, "x": 0, "y": 0}, {"id": 0, "x": 1, "y": 1}], "edges": []}')
    with pytest.raises(ValidationError):
        road_io.read_graph(str(path))


def test_missing_file_is_input_error(tmp_path):
    with pytest.raises(InputError):
        road_io.read_graph(str(tmp_path / 'nope.json'))


def test_read_grid_values(tmp_path):
    grid = road_io.read_grid(_write_pgm(tmp_path / 'z.pgm', 4, 4, [0] * 16))
    assert grid.shape == (4, 4)
    assert not grid.values.any()

    grid = road_io.read_grid(_write_pgm(tmp_path / 'v.pgm', 2, 1, [255, 128]))
    assert grid.values[0, 0] == 1.0
    assert grid.values[0, 1] == 128 / 255


def test_read_grid_skips_header_comments(tmp_path):
    path = tmp_path / 'c.pgm'
    path.write_bytes(b'P5\n# made by hand\n2 2\n255\n' + bytes([0, 51, 102, 255]))
    grid = road_io.read_grid(str(path))
    np.testing.assert_allclose(grid.values, [[0, 0.2], [0.4, 1.0]])


def test_grid_round_trip_is_byte_identical(tmp_path):
    rng = np.random.default_rng(5)
    data = rng.integers(0, 256, (64, 64)).astype(np.uint8)
    first = _write_pgm(tmp_path / 'a.pgm', 64, 64, data.tobytes())
    second = str(tmp_path / 'b.pgm')
    road_io.write_grid(road_io.read_grid(first), second)
    assert (tmp_path / 'b.pgm').read_bytes() == (tmp_path / 'a.pgm').read_bytes()


@pytest.mark.parametrize('kwargs, payload', [
    ({'magic': b'P2'}, [0] * 4),
    ({'maxval': 65535}, [0] * 8),
    ({}, [0] * 3),
])
def test_bad_pgm(tmp_path, kwargs, payload):
    path = _write_pgm(tmp_path / 'bad.pgm', 2, 2, payload, **kwargs)
    with pytest.raises(FormatError):
        road_io.read_grid(path)


def _write_fmap(path, dims, values, magic=b'FMAP'):
    path.write_bytes(struct.pack('<4sIII', magic, *dims) + struct.pack('<%sf' % len(values), *values))
    return str(path)


def test_read_features_examples(tmp_path):
    f = road_io.read_features(_write_fmap(tmp_path / 'a.fmap', (1, 1, 2), [0.5, -1.0]))
    assert (f.gh, f.gw, f.depth) == (1, 1, 2)
    assert f.values[0, 0].tolist() == [0.5, -1.0]

    f = road_io.read_features(_write_fmap(tmp_path / 'b.fmap', (2, 2, 1), [1, 2, 3, 4]))
    assert f.values[:, :, 0].tolist() == [[1, 2], [3, 4]]


@pytest.mark.parametrize('dims, values, magic', [
    ((2, 2, 1), [1, 2, 3], b'FMAP'),
    ((1, 1, 1), [1, 2], b'FMAP'),
    ((1, 1, 1), [1], b'PAMF'),
])
def test_bad_features(tmp_path, dims, values, magic):
    with pytest.raises(FormatError):
        road_io.read_features(_write_fmap(tmp_path / 'bad.fmap', dims, values, magic))


def test_features_round_trip(tmp_path):
    grid = feature_grid(np.arange(24, dtype=np.float32).reshape(2, 3, 4) / 8)
    path = str(tmp_path / 'f.fmap')
    road_io.write_features(grid, path)
    np.testing.assert_array_equal(road_io.read_features(path).values, grid.values)


def test_candidates_and_vertices_round_trip(tmp_path):
    cands = candidate_set([(0, 0.5, 0.5), (1, 20.5, 0.5)], [(0, 1)], 64, labels=[1], probs=[0.75])
    path = str(tmp_path / 'c.json')
    road_io.write_candidates(cands, path)
    back = road_io.read_candidates(path)
    assert back.vertices == cands.vertices
    assert back.pairs == [(0, 1)]
    assert back.labels == [1] and back.probs == [0.75]

    points = [scored_point(3, 4, 0.5, 'keypoint'), scored_point(9, 1, 1.0, 'road')]
    path = str(tmp_path / 'v.json')
    road_io.write_vertices(points, path)
    assert road_io.read_vertices(path) == points
