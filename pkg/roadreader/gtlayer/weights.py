#!/usr/bin/env python
#############################################################
# road_reader/gtlayer/weights.py
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

from roadreader import settings
from roadreader.debug import error, log, ConfigurationError, FormatError
from roadreader.featex.mlp import mlp_weights, mlp_to_json, mlp_from_json
from roadreader.featex.defines import ACT_RELU, ACT_IDENTITY
from roadreader.road_io import read_json, write_json


def _matrix(value, name):
    value = np.array(value, dtype=np.float64)
    if not np.all(np.isfinite(value)):
        error(_matrix, 'Fatal', '%s holds non-finite values.' % name, ConfigurationError)
    return value


class layer_weights(object):
    """One graph transformer layer

    Arguments:
    List:heads     -- (wq, wk, wv) per head, each d x d_model.
    Dict:ff        -- w1 (d_ff x d_model), b1, w2 (d_model x d_ff), b2.
    Tuple:ln1,ln2  -- (scale, shift) layer norm parameters.
    Float:dropout  -- Kept for the file format, identity at inference.
    """

    def __init__(self, heads, ff, ln1, ln2, dropout=None):
        self.__name__ = 'Layer_Weights'
        self.heads = [tuple(_matrix(m, 'head') for m in head) for head in heads]
        self.w1 = _matrix(ff['w1'], 'w1')
        self.b1 = _matrix(ff['b1'], 'b1')
        self.w2 = _matrix(ff['w2'], 'w2')
        self.b2 = _matrix(ff['b2'], 'b2')
        self.ln1 = tuple(_matrix(v, 'ln1') for v in ln1)
        self.ln2 = tuple(_matrix(v, 'ln2') for v in ln2)
        self.dropout = settings.dropout if dropout is None else dropout
        self._check_errors()

    def __repr__(self):
        return 'Layer Weights: %s heads x %s' % (len(self.heads), self.d_head)

    def _get_d_head(self):
        return self.heads[0][0].shape[0]
    d_head = property(_get_d_head)

    def _get_d_model(self):
        return len(self.heads) * self.d_head
    d_model = property(_get_d_model)

    def _check_errors(self):
        if not self.heads:
            error(self, 'Fatal', 'Need at least one head.', ConfigurationError)
        d, d_model = self.d_head, self.d_model
        for c, head in enumerate(self.heads):
            for m in head:
                if m.shape != (d, d_model):
                    error(self, 'Fatal', 'Head %s matrix is %s, expected %s.' % (c, m.shape, (d, d_model)), ConfigurationError)
        d_ff = self.w1.shape[0]
        if (self.w1.shape != (d_ff, d_model) or self.b1.shape != (d_ff,) or
                self.w2.shape != (d_model, d_ff) or self.b2.shape != (d_model,)):
            error(self, 'Fatal', 'Feedforward shapes do not chain with d_model %s.' % d_model, ConfigurationError)
        for ln in (self.ln1, self.ln2):
            if len(ln) != 2 or any(v.shape != (d_model,) for v in ln):
                error(self, 'Fatal', 'Layer norm parameters must be two vectors of %s.' % d_model, ConfigurationError)
        if not 0.0 <= self.dropout < 1.0:
            error(self, 'Fatal', 'Dropout rate %s outside [0,1).' % self.dropout, ConfigurationError)


class model_weights(object):
    """Edge MLP, transformer layers and the link head

    Arguments:
    Obj:mlp       -- mlp_weights, output size d_model.
    List:layers   -- layer_weights, settings.n_layers of them.
    Tuple:head    -- (w vector of d_model, scalar b).
    """

    def __init__(self, mlp, layers, head):
        self.__name__ = 'Model_Weights'
        self.mlp = mlp
        self.layers = list(layers)
        self.head_w = _matrix(head[0], 'head w')
        self.head_b = float(head[1])
        self._check_errors()

    def __repr__(self):
        return 'Model Weights: %s layers, d_model %s' % (len(self.layers), self.d_model)

    def _get_d_model(self):
        return self.head_w.shape[0]
    d_model = property(_get_d_model)

    def _check_errors(self):
        if len(self.layers) != settings.n_layers:
            error(self, 'Fatal', 'Model needs %s layers, got %s.' % (settings.n_layers, len(self.layers)), ConfigurationError)
        if self.head_w.ndim != 1:
            error(self, 'Fatal', 'Head weight must be a vector.', ConfigurationError)
        if self.mlp.d_out != self.d_model:
            error(self, 'Fatal', 'MLP gives %s values, layers take %s.' % (self.mlp.d_out, self.d_model), ConfigurationError)
        for i, layer in enumerate(self.layers):
            if layer.d_model != self.d_model:
                error(self, 'Fatal', 'Layer %s has d_model %s, expected %s.' % (i, layer.d_model, self.d_model), ConfigurationError)


def _get(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        error(_get, 'Fatal', '%s: missing field %r.' % (where, key), FormatError)
    return doc[key]


def model_from_json(doc, where='weights'):
    layers = []
    for i, layer in enumerate(_get(doc, 'layers', where)):
        at = '%s.layers[%s]' % (where, i)
        heads = [(_get(h, 'wq', at), _get(h, 'wk', at), _get(h, 'wv', at)) for h in _get(layer, 'heads', at)]
        ln1, ln2 = _get(layer, 'ln1', at), _get(layer, 'ln2', at)
        layers.append(layer_weights(heads, _get(layer, 'ff', at),
                                    (_get(ln1, 'scale', at), _get(ln1, 'shift', at)),
                                    (_get(ln2, 'scale', at), _get(ln2, 'shift', at)),
                                    layer.get('dropout')))
    head = _get(doc, 'head', where)
    return model_weights(mlp_from_json(_get(doc, 'mlp', where), where + '.mlp'), layers,
                         (_get(head, 'w', where + '.head'), _get(head, 'b', where + '.head')))


def model_to_json(m):
    layers = []
    for layer in m.layers:
        layers.append({'heads': [{'wq': q.tolist(), 'wk': k.tolist(), 'wv': v.tolist()} for q, k, v in layer.heads],
                       'ff': {'w1': layer.w1.tolist(), 'b1': layer.b1.tolist(),
                              'w2': layer.w2.tolist(), 'b2': layer.b2.tolist()},
                       'ln1': {'scale': layer.ln1[0].tolist(), 'shift': layer.ln1[1].tolist()},
                       'ln2': {'scale': layer.ln2[0].tolist(), 'shift': layer.ln2[1].tolist()},
                       'dropout': layer.dropout})
    return {'mlp': mlp_to_json(m.mlp), 'layers': layers, 'head': {'w': m.head_w.tolist(), 'b': m.head_b}}


def read_model_weights(path):
    log(read_model_weights, 'Reading weights %s' % path)
    return model_from_json(read_json(path), path)


def write_model_weights(m, path):
    log(write_model_weights, 'Writing weights %s' % path)
    write_json(model_to_json(m), path)


def _glorot(rng, n_out, n_in):
    limit = math.sqrt(6.0 / (n_in + n_out))
    return rng.uniform(-limit, limit, size=(n_out, n_in))


def random_model_weights(seed, d_in, d_model=None, n_heads=None, d_ff=None, mlp_hidden=None):
    """Seeded stand-in weights

    Arguments:
    Int:seed        -- numpy PCG64 seed.
    Int:d_in        -- Raw edge feature size, n_sampled * depth.
    Int:d_model     -- (optional) Transformer width, default settings.hidden_dim.
    Int:n_heads     -- (optional) Heads per layer.
    Int:d_ff        -- (optional) Feedforward width.
    Int:mlp_hidden  -- (optional) MLP hidden width.

    Returns:
    Obj             -- model_weights. Matrices are Glorot uniform in
                       drawing order mlp, layers (heads q k v, w1, w2),
                       head; biases are zero and layer norms identity.
    """
    d_model = settings.hidden_dim if d_model is None else d_model
    n_heads = settings.n_heads if n_heads is None else n_heads
    d_ff = settings.hidden_dim if d_ff is None else d_ff
    mlp_hidden = settings.hidden_dim if mlp_hidden is None else mlp_hidden
    if d_model % n_heads:
        error(random_model_weights, 'Fatal', 'd_model %s not divisible by %s heads.' % (d_model, n_heads), ConfigurationError)
    d = d_model // n_heads
    rng = np.random.default_rng(seed)

    mlp = mlp_weights([(_glorot(rng, mlp_hidden, d_in), np.zeros(mlp_hidden), ACT_RELU),
                       (_glorot(rng, d_model, mlp_hidden), np.zeros(d_model), ACT_IDENTITY)])
    layers = []
    for _ in range(settings.n_layers):
        heads = [tuple(_glorot(rng, d, d_model) for _ in range(3)) for _ in range(n_heads)]
        ff = {'w1': _glorot(rng, d_ff, d_model), 'b1': np.zeros(d_ff),
              'w2': _glorot(rng, d_model, d_ff), 'b2': np.zeros(d_model)}
        ln = (np.ones(d_model), np.zeros(d_model))
        layers.append(layer_weights(heads, ff, ln, ln))
    head = (_glorot(rng, 1, d_model)[0], 0.0)
    return model_weights(mlp, layers, head)
