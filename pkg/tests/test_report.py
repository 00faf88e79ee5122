#!/usr/bin/env python
#############################################################
# road_reader/tests/test_report.py
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

import json

import pytest

from roadreader.debug import ValidationError
from roadreader.report import timing_report, run_report


def test_timing_report_adds_repeats():
    timings = timing_report([('a', 0.0, 0.5), ('b', 1.0, 1.25), ('a', 2.0, 2.5)])
    assert list(timings) == ['a', 'b']
    assert timings['a'] == pytest.approx(1000.0)
    assert timings['b'] == pytest.approx(250.0)


def test_timing_report_clamps_negative():
    assert timing_report([('a', 1.0, 0.5)]) == {'a': 0.0}


def test_stage_records_on_error():
    report = run_report('x')
    with pytest.raises(KeyError):
        with report.stage('boom'):
            raise KeyError('k')
    assert list(report.timings) == ['boom']


def test_report_json(tmp_path):
    path = tmp_path / 'out.txt'
    path.write_text('ok')
    report = run_report('synth', {'seed': 4})
    with report.stage('write'):
        report.add_output(str(path))
    report.add_params(size=256)
    doc = json.loads(report.dumps())
    assert doc['command'] == 'synth'
    assert doc['params'] == {'seed': 4, 'size': 256}
    assert doc['outputs'] == [str(path)]
    assert 'scores' not in doc and 'details' not in doc

    report.scores = {'edges': 3}
    assert report.to_json()['scores'] == {'edges': 3}


def test_missing_output_is_flagged(tmp_path):
    report = run_report('extract')
    report.add_output(str(tmp_path / 'never.json'))
    with pytest.raises(ValidationError):
        report.to_json()
