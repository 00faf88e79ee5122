#!/usr/bin/env python
#############################################################
# road_reader/tests/test_pipeline.py
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

from roadreader.debug import ConfigurationError, LayoutError
from roadreader.core.candidates import candidate_set
from roadreader.core.graph import road_graph
from roadreader.core.grid import prob_grid, mask_bundle, constant_features
from roadreader.graphs.euclid import neighbor_pairs
from roadreader.gtlayer.weights import random_model_weights
from roadreader.metrics.apls import apls
from roadreader.metrics.topo import topo
from roadreader.refine.crossings import find_crossings
from roadreader.pipeline.defines import STYLE_LIST
from roadreader.pipeline.extract import extract_params, extract_network
from roadreader.pipeline.fuse import fuse_predictions
from roadreader.pipeline.render import render_svg, prob_color
from roadreader.pipeline.scorers import edge_scorer, oracle_scorer, mask_scorer
from roadreader.pipeline.synth import synth_scene, street_positions, chain_parts, mask_features
from roadreader.pipeline.windows import plan_windows, single_window, min_grid
from roadreader.report import run_report


@pytest.fixture(scope='module')
def grid_scene():
    return synth_scene(0, 512, 'grid')


def test_default_layout_offsets():
    layout = plan_windows(2048, 2048, 512, 5, 64)
    offsets = [0, 384, 768, 1152, 1536]
    assert layout.offsets == [(x, y) for y in offsets for x in offsets]
    assert 512 - 384 > 64


def test_canvas_sized_window():
    assert plan_windows(512, 512, 512, 1, 64).offsets == [(0, 0)]
    assert single_window(300, 400).offsets == [(0, 0)]


def test_coverage_gap_is_an_error():
    with pytest.raises(LayoutError, match='minimal feasible grid_n is 5'):
        plan_windows(2048, 2048, 512, 2, 64)
    with pytest.raises(LayoutError):
        plan_windows(256, 256, 512, 1, 64)
    assert min_grid(2048, 64, 64) is None


def test_short_pairs_are_inside_some_window():
    layout = plan_windows(2048, 2048, 512, 5, 64)
    rng = np.random.default_rng(1)
    points = rng.uniform(0, 2048, (1000, 2))
    for i, j in neighbor_pairs(points, 64):
        pair = points[[i, j]]
        assert any(layout.interior(k, pair).all() for k in range(len(layout)))


def test_fuse_examples():
    assert fuse_predictions([('e', 0.7)]) == {'e': 0.7}
    assert fuse_predictions([('e', 0.6), ('f', 0.1), ('e', 0.8), ('e', 1.0)])['e'] == pytest.approx(0.8)


def test_fuse_matches_grouped_mean():
    rng = np.random.default_rng(3)
    keys = rng.integers(0, 500, 10000).tolist()
    probs = rng.uniform(0, 1, 10000).tolist()
    fused = fuse_predictions(zip(keys, probs))
    for key in set(keys):
        expected = np.mean([p for k, p in zip(keys, probs) if k == key])
        assert fused[key] == pytest.approx(expected)


def _cands(vertices, d_nei=64):
    return candidate_set(vertices, [tuple(p) for p in neighbor_pairs([v[1:] for v in vertices], d_nei)], d_nei)


def test_oracle_scorer():
    gt = road_graph([(0, 10, 10), (1, 40, 10), (2, 70, 10)], [(0, 1), (1, 2)])
    cands = _cands([(0, 10, 10), (1, 40, 10), (2, 70, 10)])
    assert dict(zip(cands.pairs, oracle_scorer(cands, gt, 4))) == {(0, 1): 1, (0, 2): 0, (1, 2): 1}

    shifted = _cands([(0, 12, 11), (1, 38, 9), (2, 71, 13)])
    assert dict(zip(shifted.pairs, oracle_scorer(shifted, gt, 4))) == {(0, 1): 1, (0, 2): 0, (1, 2): 1}
    assert not oracle_scorer(shifted, road_graph(), 4).any()


def test_mask_scorer():
    values = np.zeros((32, 64))
    values[10, :] = 1.0
    road = prob_grid(values)
    on = _cands([(0, 4.5, 10.5), (1, 40.5, 10.5)])
    off = _cands([(0, 4.5, 25.5), (1, 40.5, 25.5)])
    assert mask_scorer(on, road, 8).tolist() == [1.0]
    assert mask_scorer(off, road, 8).tolist() == [0.0]

    values = np.zeros((32, 64))
    values[:, :32] = 1.0
    half = _cands([(0, 0.5, 16.5), (1, 63.5, 16.5)])
    assert mask_scorer(half, prob_grid(values), 200)[0] == pytest.approx(0.5, abs=0.02)
    with pytest.raises(ConfigurationError):
        mask_scorer(half, road, 1)


def test_scorer_payload_checked():
    with pytest.raises(ConfigurationError):
        edge_scorer('oracle')
    with pytest.raises(ConfigurationError):
        edge_scorer('fortune')
    assert edge_scorer('mask', road=prob_grid.zeros(2, 2)).kind == 'mask_heuristic'


def test_synth_is_deterministic():
    for style in STYLE_LIST:
        gt1, bundle1, f1 = synth_scene(4, 256, style)
        gt2, bundle2, f2 = synth_scene(4, 256, style)
        assert gt1 == gt2
        np.testing.assert_array_equal(bundle1.road.values, bundle2.road.values)
        np.testing.assert_array_equal(f1.values, f2.values)


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_overpass_scene_crosses(seed):
    gt, bundle, _ = synth_scene(seed, 512, 'overpass')
    assert find_crossings(gt)
    assert bundle.overpass.values.max() > 0


@pytest.mark.parametrize('seed', [0, 5])
def test_grid_counts_replay(seed):
    rng = np.random.default_rng(seed)
    xs = street_positions(rng, 512)
    ys = street_positions(rng, 512)
    row_parts = sum(chain_parts(b - a) for a, b in zip(xs[:-1], xs[1:]))
    col_parts = sum(chain_parts(b - a) for a, b in zip(ys[:-1], ys[1:]))
    nodes = len(xs) * len(ys) + len(ys) * (row_parts - (len(xs) - 1)) + len(xs) * (col_parts - (len(ys) - 1))
    edges = len(ys) * row_parts + len(xs) * col_parts

    gt, _, _ = synth_scene(seed, 512, 'grid')
    assert (len(gt), gt.number_of_edges()) == (nodes, edges)


def test_synth_rejects_bad_arguments():
    with pytest.raises(ConfigurationError):
        synth_scene(0, 128, 'grid')
    with pytest.raises(ConfigurationError):
        synth_scene(0, 256, 'maze')
    with pytest.raises(ConfigurationError):
        synth_scene(0, 256, 'grid', noise=2.0)


def test_mask_features_shape(grid_scene):
    _, bundle, features = grid_scene
    assert (features.gh, features.gw, features.depth) == (32, 32, 8)
    assert not features.values[:, :, 3:].any()
    odd = mask_bundle(prob_grid.zeros(40, 40), prob_grid.zeros(40, 40), prob_grid.zeros(40, 40))
    with pytest.raises(ConfigurationError):
        mask_features(odd)


def test_extract_empty_masks():
    zero = prob_grid.zeros(64, 64)
    g = extract_network(mask_bundle(zero, zero, zero), None, edge_scorer('mask', road=zero), extract_params())
    assert len(g) == 0


def test_extract_oracle_recovers_grid(grid_scene):
    gt, bundle, _ = grid_scene
    report = run_report('extract')
    g = extract_network(bundle, None, edge_scorer('oracle', gt=gt), extract_params(), report)
    assert apls(gt, g).score >= 0.95
    for a, b in g.edges:
        assert g.edge_length(a, b) <= 64
    assert set(report.timings) == {'nms', 'candidates', 'score', 'fuse'}
    assert topo(gt, g).f1 >= 0.95


def test_extract_mask_scorer_on_noisy_masks():
    gt, bundle, _ = synth_scene(0, 512, 'grid', noise=0.05)
    g = extract_network(bundle, None, edge_scorer('mask', road=bundle.road), extract_params())
    assert apls(gt, g).score >= 0.80


def test_oracle_result_ignores_layout(grid_scene):
    gt, bundle, _ = grid_scene
    scorer = edge_scorer('oracle', gt=gt)
    single = extract_network(bundle, None, scorer, extract_params())
    coarse = extract_network(bundle, None, scorer, extract_params(layout=(256, 5)))
    fine = extract_network(bundle, None, scorer, extract_params(layout=(256, 16)))
    assert single.edges == coarse.edges == fine.edges


def test_large_canvas_ignores_grid():
    gt, bundle, _ = synth_scene(0, 2048, 'grid')
    scorer = edge_scorer('oracle', gt=gt)
    coarse = extract_network(bundle, None, scorer, extract_params(layout=(512, 5)))
    fine = extract_network(bundle, None, scorer, extract_params(layout=(512, 16)))
    assert coarse.edges
    assert coarse.edges == fine.edges


def test_extract_transformer_runs():
    gt, bundle, features = synth_scene(2, 256, 'radial')
    weights = random_model_weights(0, 4 * features.depth, d_model=16, n_heads=2, d_ff=16, mlp_hidden=16)
    scorer = edge_scorer('transformer', weights=weights)
    g = extract_network(bundle, features, scorer, extract_params(decision_threshold=0.0))
    assert g.edge_probs is not None
    assert all(0.0 <= p <= 1.0 for p in g.edge_probs.values())

    with pytest.raises(ConfigurationError):
        extract_network(bundle, constant_features(16, 16, 3), scorer, extract_params())


def test_render_svg(tmp_path):
    g = road_graph([(0, 10, 10), (1, 40, 10), (2, 40, 30)], [(0, 1), (1, 2)], [0.0, 1.0])
    path = render_svg(g, str(tmp_path / 'g.svg'), (64, 48))
    text = (tmp_path / 'g.svg').read_text()
    assert path.endswith('g.svg')
    assert text.count('<circle') == 3
    assert text.count('<line') == 2
    assert prob_color(0.0) in text and prob_color(1.0) in text
    assert prob_color(1.0) == '#00c800'
