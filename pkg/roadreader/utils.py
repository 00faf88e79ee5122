#!/usr/bin/env python
#############################################################
# road_reader/utils.py
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

from roadreader.debug import error, log, InputError
from roadreader.core.defines import FMAP_MAGIC, PGM_MAGIC, JSON_MAGIC


def guess_filetype(path):
    log(guess_filetype, 'Looking for file type of %s' % path)
    check_input_path(path)

    with open(path, 'rb') as f:
        buf = f.read(64)

    if buf.startswith(FMAP_MAGIC):
        ftype = FMAP_MAGIC
        log(guess_filetype, 'File looks like a feature map.')

    elif buf.startswith(PGM_MAGIC):
        ftype = PGM_MAGIC
        log(guess_filetype, 'File looks like a PGM grid.')

    elif buf.lstrip().startswith(JSON_MAGIC):
        ftype = JSON_MAGIC
        log(guess_filetype, 'File looks like JSON.')
    else:
        ftype = None
        error(guess_filetype, 'Fatal', 'Could not determine file type of %s.' % path, InputError)

    return ftype


def check_input_path(path):
    """Fail with an input error when path is not a readable file."""
    if not os.path.isfile(path):
        error(check_input_path, 'Fatal', "File path doesn't exist: %s" % path, InputError)
    return path


def create_output_dir(outpath):
    if os.path.exists(outpath):
        if os.listdir(outpath):
            log(create_output_dir, 'Output directory %s not empty, files will be overwritten.' % outpath)
    else:
        try:
            os.makedirs(outpath)
            log(create_output_dir, 'Created output path: %s' % outpath)
        except Exception as e:
            error(create_output_dir, 'Fatal', '%s' % e, InputError)
    return outpath
