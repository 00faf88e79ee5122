#!/usr/bin/env python
#############################################################
# road_reader/graphs/components.py
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

import networkx as nx

from roadreader.debug import verbose_log


def count_special_components(g):
    """Isolated triangles and 3-stars

    Arguments:
    Obj:g       -- road_graph.

    Returns:
    Tuple       -- (triangles, stars). A triangle component has three
                   nodes of degree 2, a star four nodes with one of
                   degree 3 and three of degree 1.
    """
    nxg = g.to_networkx()
    n_k3 = 0
    n_k13 = 0
    for comp in nx.connected_components(nxg):
        degrees = sorted(nxg.degree(n) for n in comp)
        if len(comp) == 3 and degrees == [2, 2, 2]:
            n_k3 += 1
        elif len(comp) == 4 and degrees == [1, 1, 1, 3]:
            n_k13 += 1
    verbose_log(count_special_components, '%s triangles, %s stars' % (n_k3, n_k13))
    return n_k3, n_k13
