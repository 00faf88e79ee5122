#!/usr/bin/env python
#############################################################
# road_reader/tests/reference.py
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

"""Slow scalar re-implementations the vectorised code is checked against."""

import math
from fractions import Fraction


def orientation(o, a, b):
    value = ((Fraction(a[0]) - o[0]) * (Fraction(b[1]) - o[1]) -
             (Fraction(a[1]) - o[1]) * (Fraction(b[0]) - o[0]))
    return (value > 0) - (value < 0)


def crosses(p1, p2, p3, p4):
    """Exact proper crossing of two segments."""
    d1 = orientation(p3, p4, p1)
    d2 = orientation(p3, p4, p2)
    d3 = orientation(p1, p2, p3)
    d4 = orientation(p1, p2, p4)
    return d1 * d2 < 0 and d3 * d4 < 0


def segment_distance(p, a, b):
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    seg_sq = dx * dx + dy * dy
    t = 0.0 if seg_sq == 0 else max(0.0, min(1.0, ((p[0] - ax) * dx + (p[1] - ay) * dy) / seg_sq))
    return math.hypot(p[0] - ax - t * dx, p[1] - ay - t * dy)


def interpolate_replay(length, d_r, rng):
    distances = []
    p = 0
    while True:
        if not p + 2 * d_r - 1 < length:
            return distances
        u = int(rng.integers(d_r, 2 * d_r - 1, endpoint=True))
        if p + u + d_r - 1 < length:
            p = p + u
            distances.append(p)


def bilinear(values, u, v):
    """values[row][col] sampled at fractional cell (u, v), clamped at the border."""
    rows, cols = len(values), len(values[0])
    u = min(max(u, 0.0), cols - 1.0)
    v = min(max(v, 0.0), rows - 1.0)
    c0, r0 = int(math.floor(u)), int(math.floor(v))
    c1, r1 = min(c0 + 1, cols - 1), min(r0 + 1, rows - 1)
    fu, fv = u - c0, v - r0
    top = values[r0][c0] * (1 - fu) + values[r0][c1] * fu
    bottom = values[r1][c0] * (1 - fu) + values[r1][c1] * fu
    return top * (1 - fv) + bottom * fv


def bce(pred, target, eps):
    total = 0.0
    for p, t in zip(pred, target):
        p = min(max(p, eps), 1 - eps)
        total -= t * math.log(p) + (1 - t) * math.log(1 - p)
    return total / len(pred)


def greedy_peaks(values, threshold, radius):
    """Above-threshold pixels, best score first then row then column,
    kept unless a kept pixel lies closer than radius."""
    pixels = [(-float(values[y][x]), y, x) for y in range(len(values)) for x in range(len(values[0]))
              if values[y][x] > threshold]
    kept = []
    for neg, y, x in sorted(pixels):
        if all((kx - x) ** 2 + (ky - y) ** 2 >= radius * radius for kx, ky, _ in kept):
            kept.append((x, y, -neg))
    return kept


def coupled_replay(road, keypoint, overpass, t_k, t_r, d_k, d_r):
    keys = greedy_peaks(keypoint, t_k, d_k)
    taken = set((x, y) for x, y, _ in keys)
    keys += [p for p in greedy_peaks(overpass, t_k, d_k) if (p[0], p[1]) not in taken]
    masked = [[road[y][x] if all(math.hypot(kx - x, ky - y) >= d_r for kx, ky, _ in keys) else 0.0
               for x in range(len(road[0]))] for y in range(len(road))]
    return keys + greedy_peaks(masked, t_r, d_r)


def matvec(m, x):
    return [sum(float(m[r][c]) * x[c] for c in range(len(x))) for r in range(len(m))]


def mlp(layers, x):
    x = [float(v) for v in x]
    for w, b, act in layers:
        x = [v + float(bv) for v, bv in zip(matvec(w, x), b)]
        if act == 'relu':
            x = [max(v, 0.0) for v in x]
    return x


def layer_norm(x, scale, shift, eps):
    mean = sum(x) / len(x)
    var = sum((v - mean) ** 2 for v in x) / len(x)
    return [(v - mean) / math.sqrt(var + eps) * float(s) + float(b) for v, s, b in zip(x, scale, shift)]


def neighborhood(lg, i, self_loops):
    nbrs = list(lg.neighbors(i))
    if self_loops:
        nbrs.append(i)
    return sorted(nbrs)


def attention(w, lg, X, c, self_loops=True):
    """{(dst, src): alpha} of head c."""
    wq, wk, _ = w.heads[c]
    d = len(wq)
    alpha = {}
    for i in range(len(X)):
        q = matvec(wq, X[i])
        nbrs = neighborhood(lg, i, self_loops)
        logits = [sum(a * b for a, b in zip(q, matvec(wk, X[j]))) / math.sqrt(d) for j in nbrs]
        if not logits:
            continue
        peak = max(logits)
        e = [math.exp(l - peak) for l in logits]
        for j, v in zip(nbrs, e):
            alpha[(i, j)] = v / sum(e)
    return alpha


def transformer_layer(w, lg, X, eps, self_loops=True):
    X = [[float(v) for v in row] for row in X]
    out = []
    alphas = [attention(w, lg, X, c, self_loops) for c in range(len(w.heads))]
    for i in range(len(X)):
        H = []
        for c, (_, _, wv) in enumerate(w.heads):
            acc = [0.0] * len(wv)
            for j in neighborhood(lg, i, self_loops):
                v = matvec(wv, X[j])
                acc = [a + alphas[c][(i, j)] * b for a, b in zip(acc, v)]
            H += acc
        h1 = layer_norm([x + h for x, h in zip(X[i], H)], w.ln1[0], w.ln1[1], eps)
        hidden = [max(v + float(b), 0.0) for v, b in zip(matvec(w.w1, h1), w.b1)]
        ff = [v + float(b) for v, b in zip(matvec(w.w2, hidden), w.b2)]
        out.append(layer_norm([a + b for a, b in zip(h1, ff)], w.ln2[0], w.ln2[1], eps))
    return out


def predict(m, lg, X0, eps, self_loops=True):
    X = X0
    for w in m.layers:
        X = transformer_layer(w, lg, X, eps, self_loops)
    logits = [sum(float(a) * b for a, b in zip(m.head_w, row)) + m.head_b for row in X]
    return [1.0 / (1.0 + math.exp(-l)) for l in logits]
