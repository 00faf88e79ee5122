#!/usr/bin/env python
#############################################################
# road_reader/featex/sampler.py
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

from roadreader import settings
from roadreader.debug import error, verbose_log, ConfigurationError
from roadreader.featex.mlp import mlp_forward


class sample_spec(object):
    """Where edge features are read

    Attributes:
    Int:n_sampled    -- Points per edge, endpoints included.
    Int:downsample   -- Image pixels per feature cell.
    """

    def __init__(self, n_sampled=None, downsample=None):
        self.__name__ = 'Sample_Spec'
        self.n_sampled = settings.n_sampled if n_sampled is None else n_sampled
        self.downsample = settings.downsample if downsample is None else downsample
        self._check_errors()

    def __repr__(self):
        return 'Sample Spec'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _check_errors(self):
        if self.n_sampled < 2:
            error(self, 'Fatal', 'n_sampled must be >= 2.', ConfigurationError)
        if self.downsample <= 0:
            error(self, 'Fatal', 'downsample must be > 0.', ConfigurationError)


def _axis(coord, size):
    coord = np.clip(coord, 0.0, size - 1)
    lo = np.floor(coord).astype(np.int64)
    if size > 1:
        lo = np.minimum(lo, size - 2)
        return lo, lo + 1, coord - lo
    return lo, lo, np.zeros_like(coord)


def sample_grid_bilinear(values, us, vs):
    """Clamped bilinear lookup in cell index space

    Arguments:
    Array:values  -- (rows, cols) or (rows, cols, channels).
    Array:us, vs  -- Column and row coordinates, cell centers at integers.

    Returns:
    Array         -- One value (or channel vector) per query.
    """
    values = np.asarray(values, dtype=np.float64)
    us = np.asarray(us, dtype=np.float64)
    vs = np.asarray(vs, dtype=np.float64)
    u0, u1, fu = _axis(us, values.shape[1])
    v0, v1, fv = _axis(vs, values.shape[0])
    if values.ndim == 3:
        fu = fu[..., None]
        fv = fv[..., None]
    top = values[v0, u0] * (1.0 - fu) + values[v0, u1] * fu
    bottom = values[v1, u0] * (1.0 - fu) + values[v1, u1] * fu
    return top * (1.0 - fv) + bottom * fv


def sample_bilinear(f, x, y, downsample=None):
    """Feature vector at image point (x, y)

    Cell (u, v) is centered at image point (16u + 8, 16v + 8) for the
    default downsample of 16. Queries off the grid clamp to the edge.
    """
    downsample = settings.downsample if downsample is None else downsample
    return sample_grid_bilinear(f.values, x / downsample - 0.5, y / downsample - 0.5)


def sample_positions(p1, p2, n):
    t = np.linspace(0.0, 1.0, n)
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    return p1 + t[:, None] * (p2 - p1)


def raw_edge_features(f, segments, spec):
    """Concatenated samples per edge, before the MLP

    Arguments:
    Obj:f           -- feature_grid.
    Array:segments  -- (n_edges, 2, 2) endpoint positions.
    Obj:spec        -- sample_spec.

    Returns:
    Array           -- (n_edges, n_sampled * depth), sample major.
    """
    segments = np.asarray(segments, dtype=np.float64).reshape(-1, 2, 2)
    if not len(segments):
        return np.zeros((0, spec.n_sampled * f.depth))
    # Canonical endpoint order so (p1, p2) and (p2, p1) agree.
    flip = (segments[:, 1, 0] < segments[:, 0, 0]) | (
        (segments[:, 1, 0] == segments[:, 0, 0]) & (segments[:, 1, 1] < segments[:, 0, 1]))
    segments = np.where(flip[:, None, None], segments[:, ::-1], segments)

    t = np.linspace(0.0, 1.0, spec.n_sampled)
    points = segments[:, None, 0] + t[None, :, None] * (segments[:, None, 1] - segments[:, None, 0])
    samples = sample_grid_bilinear(f.values, points[..., 0] / spec.downsample - 0.5,
                                   points[..., 1] / spec.downsample - 0.5)
    return samples.reshape(len(segments), spec.n_sampled * f.depth)


def edge_feature(f, p1, p2, spec, mlp):
    """MLP-projected feature of one candidate edge

    Arguments:
    Obj:f       -- feature_grid.
    Tuple:p1,p2 -- Endpoint image positions.
    Obj:spec    -- sample_spec.
    Obj:mlp     -- mlp_weights, input size n_sampled * depth.
    """
    return edge_features(f, [(p1, p2)], spec, mlp)[0]


def edge_features(f, segments, spec, mlp):
    """MLP-projected features of many candidate edges, one row each."""
    if mlp.d_in != spec.n_sampled * f.depth:
        error(edge_features, 'Fatal', 'MLP takes %s inputs, %s samples x %s channels given.'
              % (mlp.d_in, spec.n_sampled, f.depth), ConfigurationError)
    raw = raw_edge_features(f, segments, spec)
    verbose_log(edge_features, '%s edges sampled at %s points' % (len(raw), spec.n_sampled))
    if not len(raw):
        return np.zeros((0, mlp.d_out))
    return mlp_forward(mlp, raw)
