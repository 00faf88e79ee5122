#!/usr/bin/env python
#############################################################
# road_reader/debug
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

import sys
import traceback
from roadreader import settings


class RoadReaderError(Exception):
    """Base of every error the package raises on purpose.

    exit_code is what the command line dispatcher returns for it.
    """
    exit_code = 1


class InputError(RoadReaderError):
    exit_code = 2


class FormatError(RoadReaderError):
    exit_code = 2


class ValidationError(RoadReaderError):
    exit_code = 3


class ConfigurationError(RoadReaderError):
    exit_code = 3


class LayoutError(RoadReaderError):
    exit_code = 3


class CapacityError(RoadReaderError):
    exit_code = 3


class DomainError(RoadReaderError):
    exit_code = 3


def _name(obj):
    return getattr(obj, '__name__', obj.__class__.__name__)


def log(obj, message):
    if settings.logging_on or settings.logging_on_verbose:
        print('{} {}'.format(_name(obj), message), file=sys.stderr)

def verbose_log(obj, message):
    if settings.logging_on_verbose:
        log(obj, message)

def verbose_display(displayable_obj):
    if settings.logging_on_verbose:
        print(displayable_obj.display('\t'), file=sys.stderr)

def error(obj, level, message, exc=None):
    """Report a problem.

    Arguments:
    Obj:obj       -- Function or object the problem belongs to.
    Str:level     -- 'Warn', 'Error' or 'Fatal'.
    Str:message   -- Text of the problem.
    Class:exc     -- (optional) RoadReaderError subclass raised on Fatal.

    Warn and Error only print, Fatal raises exc.
    """
    if level.lower() == 'fatal':
        if settings.fatal_traceback:
            traceback.print_stack(file=sys.stderr)
        raise (exc or RoadReaderError)('{}: {}'.format(_name(obj), message))

    print('{} {}: {}'.format(_name(obj), level, message), file=sys.stderr)
