#!/usr/bin/env python
#############################################################
# road_reader/tests/conftest.py
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

import pytest

from roadreader import settings
from roadreader.core.graph import road_graph


@pytest.fixture(autouse=True)
def quiet_settings(monkeypatch):
    monkeypatch.setattr(settings, 'logging_on', False)
    monkeypatch.setattr(settings, 'logging_on_verbose', False)
    monkeypatch.setattr(settings, 'fatal_traceback', False)
    monkeypatch.setattr(settings, 'threads', 1)


@pytest.fixture
def plus_graph():
    return road_graph([(0, 0, 0), (1, 10, 0), (2, 5, -5), (3, 5, 5)], [(0, 1), (2, 3)])


@pytest.fixture
def chain_graph():
    return road_graph([(0, 0, 0), (1, 20, 0), (2, 40, 0)], [(0, 1), (1, 2)])


@pytest.fixture
def corner_graph():
    # 0 - 1 straight, 1 - 2 - 3 turning 90 degrees at 2.
    return road_graph([(0, 0, 0), (1, 30, 0), (2, 60, 0), (3, 60, 30)], [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def junction_graph():
    return road_graph([(0, 50, 50), (1, 10, 50), (2, 90, 50), (3, 50, 90)], [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def highway_graph():
    # Highway 4-5-6 running over two parallel roads.
    return road_graph([(0, 0, 30), (1, 100, 30), (2, 0, 70), (3, 100, 70),
                       (4, 50, 0), (5, 50, 50), (6, 50, 100)],
                      [(0, 1), (2, 3), (4, 5), (5, 6)])
