#!/usr/bin/env python
#############################################################
# road_reader/tests/test_featex.py
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
import pytest

from roadreader.debug import ConfigurationError, FormatError
from roadreader.core.grid import feature_grid, constant_features
from roadreader.featex.mlp import mlp_weights, mlp_forward, mlp_to_json, mlp_from_json
from roadreader.featex.sampler import (sample_spec, sample_bilinear, sample_grid_bilinear,
                                       sample_positions, raw_edge_features, edge_feature, edge_features)

from tests import reference


@pytest.fixture
def ramp():
    # Cell (u, v) holds 16u + 8, the image x of its center.
    values = np.tile((16 * np.arange(6) + 8.0)[None, :, None], (3, 1, 1))
    return feature_grid(values)


def test_constant_grid_samples_constant():
    f = constant_features(3, 4, 2, 0.25)
    for x, y in [(0, 0), (17.3, 40.1), (1000, -50)]:
        np.testing.assert_allclose(sample_bilinear(f, x, y), [0.25, 0.25])


def test_midpoint_between_cells():
    f = feature_grid([[[0.0], [1.0]]])
    assert sample_bilinear(f, 16.0, 8.0)[0] == pytest.approx(0.5)


def test_matches_scalar_bilinear():
    rng = np.random.default_rng(12)
    f = feature_grid(rng.normal(size=(8, 8, 4)))
    for x, y in rng.uniform(-20, 150, (100, 2)):
        expected = [reference.bilinear(f.values[:, :, ch].tolist(), x / 16 - 0.5, y / 16 - 0.5) for ch in range(4)]
        np.testing.assert_allclose(sample_bilinear(f, x, y), expected, atol=1e-6)


def test_affine_grid_is_exact_inside():
    us, vs = np.meshgrid(np.arange(5.0), np.arange(4.0))
    values = 3.0 * us - 2.0 * vs + 1.0
    q_u = np.array([0.3, 1.75, 3.5, 4.0])
    q_v = np.array([0.0, 2.2, 1.5, 3.0])
    np.testing.assert_allclose(sample_grid_bilinear(values, q_u, q_v), 3.0 * q_u - 2.0 * q_v + 1.0)


def test_far_queries_clamp_to_edge_cell(ramp):
    assert sample_bilinear(ramp, -500, 20)[0] == 8.0
    assert sample_bilinear(ramp, 5000, 20)[0] == 88.0


def test_sample_positions():
    np.testing.assert_allclose(sample_positions((0, 0), (48, 0), 4), [[0, 0], [16, 0], [32, 0], [48, 0]])


def test_ramp_samples(ramp):
    raw = raw_edge_features(ramp, [((0, 8), (48, 8))], sample_spec(4, 16))
    # x = 0 lies left of the first cell center and clamps to it.
    assert raw[0].tolist() == [8.0, 16.0, 32.0, 48.0]


def test_edge_feature_identity_mlp(ramp):
    spec = sample_spec(4, 16)
    out = edge_feature(ramp, (16, 8), (64, 8), spec, mlp_weights.identity(4))
    np.testing.assert_allclose(out, [16, 32, 48, 64])


def test_edge_feature_constant_grid():
    f = constant_features(2, 2, 3, 0.5)
    spec = sample_spec(2, 16)
    rng = np.random.default_rng(0)
    w = mlp_weights([(rng.normal(size=(4, 6)), rng.normal(size=4), 'relu')])
    expected = mlp_forward(w, np.full(6, 0.5))
    np.testing.assert_allclose(edge_feature(f, (3, 3), (20, 25), spec, w), expected)


def test_edge_feature_is_orientation_free():
    rng = np.random.default_rng(1)
    f = feature_grid(rng.normal(size=(4, 4, 2)))
    spec = sample_spec(4, 16)
    w = mlp_weights.identity(8)
    for p1, p2 in [((5, 9), (40, 30)), ((10, 2), (10, 50)), ((33, 7), (2, 7))]:
        np.testing.assert_array_equal(edge_feature(f, p1, p2, spec, w), edge_feature(f, p2, p1, spec, w))


def test_edge_features_shape_checks():
    f = constant_features(2, 2, 3)
    spec = sample_spec(4, 16)
    assert edge_features(f, [], spec, mlp_weights.identity(12)).shape == (0, 12)
    with pytest.raises(ConfigurationError):
        edge_features(f, [((0, 0), (1, 1))], spec, mlp_weights.identity(5))
    with pytest.raises(ConfigurationError):
        sample_spec(1, 16)


def test_mlp_zero_and_identity():
    w = mlp_weights([(np.zeros((3, 4)), np.zeros(3), 'relu')])
    assert mlp_forward(w, [1, -2, 3, 4]).tolist() == [0, 0, 0]
    x = np.array([0.5, -1.5, 2.0])
    np.testing.assert_array_equal(mlp_forward(mlp_weights.identity(3), x), x)


def test_mlp_matches_scalar_oracle():
    rng = np.random.default_rng(6)
    layers = [(rng.normal(size=(5, 4)), rng.normal(size=5), 'relu'),
              (rng.normal(size=(2, 5)), rng.normal(size=2), 'identity')]
    w = mlp_weights(layers)
    for x in rng.normal(size=(10, 4)):
        np.testing.assert_allclose(mlp_forward(w, x), reference.mlp(layers, x), rtol=1e-12, atol=1e-12)
    batch = rng.normal(size=(7, 4))
    np.testing.assert_allclose(mlp_forward(w, batch), [reference.mlp(layers, x) for x in batch], atol=1e-12)


@pytest.mark.parametrize('layers', [
    [],
    [(np.zeros((2, 3)), np.zeros(3), 'relu')],
    [(np.zeros((2, 3)), np.zeros(2), 'tanh')],
    [(np.zeros((2, 3)), np.zeros(2), 'relu'), (np.zeros((2, 3)), np.zeros(2), 'relu')],
])
def test_mlp_rejects_bad_layers(layers):
    with pytest.raises(ConfigurationError):
        mlp_weights(layers)


def test_mlp_json_round_trip():
    rng = np.random.default_rng(2)
    w = mlp_weights([(rng.normal(size=(3, 2)), rng.normal(size=3), 'relu')])
    back = mlp_from_json(mlp_to_json(w))
    np.testing.assert_array_equal(back.layers[0][0], w.layers[0][0])
    assert back.dims == [2, 3]
    with pytest.raises(FormatError):
        mlp_from_json([{'w': [[1]]}])
