#!/usr/bin/env python
#############################################################
# road_reader/report.py
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

import os
import json
import time
from contextlib import contextmanager

from roadreader.debug import error, log, ValidationError


def timing_report(stages):
    """Per stage durations

    Arguments:
    List:stages  -- (name, start, end) perf_counter readings.

    Returns:
    Dict         -- Stage name to milliseconds, first appearance order;
                    repeated stages add up.
    """
    timings = {}
    for name, start, end in stages:
        timings[name] = timings.get(name, 0.0) + max(0.0, end - start) * 1000.0
    return timings


class run_report(object):
    """What one command did

    Attributes:
    Str:command    -- Subcommand name.
    Dict:params    -- Effective parameters.
    List:outputs   -- Files written.
    Dict:scores    -- (optional) Metric values.
    Dict:details   -- (optional) Per item diagnostics.
    """

    def __init__(self, command, params=None):
        self.__name__ = 'Run_Report'
        self.command = command
        self.params = dict(params or {})
        self.outputs = []
        self.scores = None
        self.details = None
        self._stages = []
        self._started = time.perf_counter()

    def __repr__(self):
        return 'Run Report: %s' % self.command

    @contextmanager
    def stage(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            end = time.perf_counter()
            self._stages.append((name, start, end))
            log(self, 'Stage %s took %.1f ms' % (name, (end - start) * 1000.0))

    def _get_timings(self):
        return timing_report(self._stages)
    timings = property(_get_timings)

    def _get_wall_ms(self):
        return (time.perf_counter() - self._started) * 1000.0
    wall_ms = property(_get_wall_ms)

    def add_output(self, path):
        self.outputs.append(path)
        return path

    def add_params(self, **params):
        self.params.update(params)

    def _check_errors(self):
        for path in self.outputs:
            if not os.path.exists(path):
                error(self, 'Fatal', 'Output %s was not written.' % path, ValidationError)

    def to_json(self):
        self._check_errors()
        doc = {'command': self.command,
               'params': self.params,
               'timings': self.timings,
               'outputs': list(self.outputs)}
        if self.scores is not None:
            doc['scores'] = self.scores
        if self.details is not None:
            doc['details'] = self.details
        return doc

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, default=str)
