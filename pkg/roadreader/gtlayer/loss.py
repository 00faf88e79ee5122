#!/usr/bin/env python
#############################################################
# road_reader/gtlayer/loss.py
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
from roadreader.debug import error, ConfigurationError, ValidationError


class loss_config(object):
    """Loss weighting

    Attributes:
    Float:lam   -- Weight of the edge term.
    Float:eps   -- Probabilities clamp to [eps, 1 - eps].
    """

    def __init__(self, lam=None, eps=None):
        self.__name__ = 'Loss_Config'
        self.lam = settings.loss_lambda if lam is None else lam
        self.eps = settings.loss_eps if eps is None else eps
        self._check_errors()

    def __repr__(self):
        return 'Loss Config'

    def __iter__(self):
        for key, value in vars(self).items():
            if not key.startswith('_'):
                yield key, value

    def _check_errors(self):
        if self.lam < 0:
            error(self, 'Fatal', 'lambda must be >= 0.', ConfigurationError)
        if not 0.0 < self.eps < 0.5:
            error(self, 'Fatal', 'eps must be in (0, 0.5).', ConfigurationError)


def bce(pred, target, eps):
    """Mean binary cross entropy with clamped predictions."""
    pred = np.clip(np.asarray(pred, dtype=np.float64), eps, 1.0 - eps)
    target = np.asarray(target, dtype=np.float64)
    if pred.shape != target.shape:
        error(bce, 'Fatal', 'Prediction shape %s, target shape %s.' % (pred.shape, target.shape), ValidationError)
    if not pred.size:
        return 0.0
    return float(-(target * np.log(pred) + (1.0 - target) * np.log(1.0 - pred)).mean())


def mask_loss(pred_masks, gt_masks, eps):
    pred = np.concatenate([grid.values.ravel() for _, grid in pred_masks])
    gt = np.concatenate([grid.values.ravel() for _, grid in gt_masks])
    return bce(pred, gt, eps)


def total_loss(pred_masks, gt_masks, pred_B, gt_B, cfg):
    """Mask BCE plus weighted edge BCE

    Arguments:
    Obj:pred_masks  -- Predicted mask_bundle.
    Obj:gt_masks    -- Target mask_bundle.
    List:pred_B     -- Edge probabilities.
    List:gt_B       -- Edge labels.
    Obj:cfg         -- loss_config.

    Returns:
    Float           -- Mean BCE over every pixel of the three masks plus
                       lam times the mean edge BCE (0 without edges).
    """
    if pred_masks.shape != gt_masks.shape:
        error(total_loss, 'Fatal', 'Mask sizes %s and %s differ.' % (pred_masks.shape, gt_masks.shape), ValidationError)
    return mask_loss(pred_masks, gt_masks, cfg.eps) + cfg.lam * bce(pred_B, gt_B, cfg.eps)
