#!/usr/bin/env python
#############################################################
# road_reader/gtlayer/attention.py
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
from scipy.special import expit

from roadreader import settings
from roadreader.debug import error, verbose_log, ConfigurationError


def layer_norm(x, scale, shift, eps=None):
    eps = settings.layer_norm_eps if eps is None else eps
    mean = x.mean(axis=-1, keepdims=True)
    var = ((x - mean) ** 2).mean(axis=-1, keepdims=True)
    return (x - mean) / np.sqrt(var + eps) * scale + shift


def segment_softmax(logits, dst, n):
    """Softmax of logits grouped by dst, accumulated in edge order."""
    peak = np.full(n, -np.inf)
    np.maximum.at(peak, dst, logits)
    e = np.exp(logits - peak[dst])
    total = np.zeros(n)
    np.add.at(total, dst, e)
    return e / total[dst]


def attention_coeffs(w, lg, X, c, self_loops=True):
    """Attention of one head over the line graph

    Arguments:
    Obj:w            -- layer_weights.
    Obj:lg           -- line_graph_view.
    Array:X          -- (n, d_model) line node features.
    Int:c            -- Head index.
    Bool:self_loops  -- (optional) Let every node attend to itself.

    Returns:
    Tuple            -- (dst, src, alpha), alpha summing to 1 per dst.
    """
    X = np.asarray(X, dtype=np.float64)
    dst, src = lg.message_edges(self_loops)
    wq, wk, _ = w.heads[c]
    q = X @ wq.T
    k = X @ wk.T
    logits = (q[dst] * k[src]).sum(axis=1) / math.sqrt(w.d_head)
    return dst, src, segment_softmax(logits, dst, len(X))


def transformer_layer(w, lg, X, self_loops=True):
    """One layer, inference mode

    Returns:
    Array       -- LN2(H' + FF(H')) with H' = LN1(X + H) and H the
                   head-concatenated attention weighted sum of Wv x.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != w.d_model:
        error(transformer_layer, 'Fatal', 'Features have shape %s, layer takes width %s.'
              % (X.shape, w.d_model), ConfigurationError)
    n = len(X)
    parts = []
    for c, (_, _, wv) in enumerate(w.heads):
        dst, src, alpha = attention_coeffs(w, lg, X, c, self_loops)
        v = X @ wv.T
        out = np.zeros((n, w.d_head))
        np.add.at(out, dst, alpha[:, None] * v[src])
        parts.append(out)
    H = np.concatenate(parts, axis=1)

    h1 = layer_norm(X + H, *w.ln1)
    ff = np.maximum(h1 @ w.w1.T + w.b1, 0.0) @ w.w2.T + w.b2
    return layer_norm(h1 + ff, *w.ln2)


def link_logits(m, lg, X0, layers=None, self_loops=True):
    X = np.asarray(X0, dtype=np.float64)
    if not len(lg):
        return np.zeros(0)
    if X.ndim != 2 or X.shape != (len(lg), m.d_model):
        error(link_logits, 'Fatal', 'Features have shape %s, expected (%s, %s).'
              % (X.shape, len(lg), m.d_model), ConfigurationError)
    layers = m.layers if layers is None else m.layers[:layers]
    for w in layers:
        X = transformer_layer(w, lg, X, self_loops)
    return X @ m.head_w + m.head_b


def predict_links(m, lg, X0, layers=None, self_loops=True):
    """Link probability per line node

    Arguments:
    Obj:m            -- model_weights.
    Obj:lg           -- line_graph_view.
    Array:X0         -- (n, d_model) MLP-projected edge features in line
                        node order.
    Int:layers       -- (optional) Run only the first layers, 0 feeds the
                        features straight into the head.
    Bool:self_loops  -- (optional) Self loops in attention.

    Returns:
    Array            -- Sigmoid of the linear head, one per line node.
    """
    probs = expit(link_logits(m, lg, X0, layers, self_loops))
    verbose_log(predict_links, '%s links scored' % len(probs))
    return probs
