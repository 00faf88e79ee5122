#!/usr/bin/env python
#############################################################
# road_reader/featex/mlp.py
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

from roadreader.debug import error, ConfigurationError, FormatError
from roadreader.featex.defines import ACT_RELU, ACT_IDENTITY, ACT_LIST


class mlp_weights(object):
    """Stack of affine layers

    Arguments:
    List:layers   -- (w, b, act) with w out x in, b of length out and act
                     one of defines.ACT_LIST.
    """

    def __init__(self, layers):
        self.__name__ = 'MLP_Weights'
        self.layers = []
        for i, (w, b, act) in enumerate(layers):
            w = np.array(w, dtype=np.float64)
            b = np.array(b, dtype=np.float64)
            if w.ndim != 2 or b.shape != (w.shape[0],):
                error(self, 'Fatal', 'Layer %s: weight %s and bias %s do not fit.' % (i, w.shape, b.shape), ConfigurationError)
            if act not in ACT_LIST:
                error(self, 'Fatal', 'Layer %s: unknown activation %r.' % (i, act), ConfigurationError)
            if self.layers and self.layers[-1][0].shape[0] != w.shape[1]:
                error(self, 'Fatal', 'Layer %s expects %s inputs, previous layer gives %s.'
                      % (i, w.shape[1], self.layers[-1][0].shape[0]), ConfigurationError)
            if not (np.all(np.isfinite(w)) and np.all(np.isfinite(b))):
                error(self, 'Fatal', 'Layer %s holds non-finite values.' % i, ConfigurationError)
            self.layers.append((w, b, act))
        if not self.layers:
            error(self, 'Fatal', 'MLP needs at least one layer.', ConfigurationError)

    def __repr__(self):
        return 'MLP Weights: %s' % ' -> '.join(str(d) for d in self.dims)

    def _get_dims(self):
        return [self.layers[0][0].shape[1]] + [w.shape[0] for w, _, _ in self.layers]
    dims = property(_get_dims)

    def _get_d_in(self):
        return self.layers[0][0].shape[1]
    d_in = property(_get_d_in)

    def _get_d_out(self):
        return self.layers[-1][0].shape[0]
    d_out = property(_get_d_out)

    @classmethod
    def identity(cls, dim):
        return cls([(np.eye(dim), np.zeros(dim), ACT_IDENTITY)])


def mlp_forward(w, x):
    """Apply an MLP

    Arguments:
    Obj:w       -- mlp_weights.
    Array:x     -- Input vector, or (N, d_in) rows.

    Returns:
    Array       -- Output with the same leading shape.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] != w.d_in:
        error(mlp_forward, 'Fatal', 'Input has %s values, MLP expects %s.' % (x.shape[-1], w.d_in), ConfigurationError)
    for weight, bias, act in w.layers:
        x = x @ weight.T + bias
        if act == ACT_RELU:
            x = np.maximum(x, 0.0)
    return x


def mlp_to_json(w):
    return [{'w': weight.tolist(), 'b': bias.tolist(), 'act': act} for weight, bias, act in w.layers]


def mlp_from_json(doc, where='mlp'):
    if not isinstance(doc, list):
        error(mlp_from_json, 'Fatal', '%s: expected a list of layers.' % where, FormatError)
    layers = []
    for i, layer in enumerate(doc):
        if not isinstance(layer, dict) or not {'w', 'b'} <= set(layer):
            error(mlp_from_json, 'Fatal', '%s[%s]: layer needs w and b.' % (where, i), FormatError)
        layers.append((layer['w'], layer['b'], layer.get('act', ACT_IDENTITY)))
    return mlp_weights(layers)
