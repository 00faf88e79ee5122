#!/usr/bin/env python
#############################################################
# road_reader
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

output_dir = 'roadreader-out'

fatal_traceback = False                 # Print traceback on fatal errors.

logging_on = False                      # Print debug info on.
logging_on_verbose = False              # Print verbose debug info on.

threads = 1                             # Worker cap for window scoring.

# Vertex extraction.
keypoint_threshold = 0.5                # t_k
road_threshold = 0.5                    # t_r
keypoint_radius = 8                     # d_k
road_radius = 16                        # d_r

# Candidate graph.
neighbor_radius = 64                    # d_nei
decision_threshold = 0.5

# Ground truth rendering.
centerline_thickness = 3
disk_radius = 3

# Overpass refinement.
refine_tau = 10.0
refine_gamma = 4.0
refine_alpha = 2.0
refine_max_iters = 100
refine_period = 10
refine_eps = 1e-3
refine_overlap = 1.0                    # Exclusion radius for moved nodes.

# Edge features and link classifier.
downsample = 16
n_sampled = 4
n_heads = 4
hidden_dim = 128
n_layers = 3
dropout = 0.1
layer_norm_eps = 1e-5
loss_lambda = 0.1
loss_eps = 1e-7

# Sliding window inference.
window_grid = 5

# Synthetic scenes.
synth_blur = 1.5
synth_depth = 8

# Small-graph oracles.
oracle_node_cap = 10

# Metrics.
topo_seed_interval = 50.0
topo_propagation_dist = 300.0
topo_sample_interval = 5.0
topo_match_radius = 8.0
topo_angle_threshold = 30.0
apls_control_interval = 50.0
apls_snap_radius = 25.0

# Edge scorers.
oracle_match_tol = 4.0
mask_samples = 8
