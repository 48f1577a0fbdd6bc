#!/usr/bin/env python
#-*- coding:utf-8 -*-
##
## _utils.py
##
##  Created on: Oct 18, 2026
##      Author: pyhill contributors
##

"""
    ===============
    List of classes
    ===============

    .. autosummary::
        :nosignatures:

        CSVWriter

    ==================
    Module description
    ==================

    Auxiliary routines shared by the main modules of pyhill, currently the
    CSV emitter used by every command of :mod:`pyhill.harness`. Reals are
    written with 17 significant digits so that a value read back is
    bit-identical to the one computed.

    ==============
    Module details
    ==============
"""

#
#==============================================================================
import csv
import datetime
import math
import numbers

from pyhill import __version__
from pyhill._fileio import FileObject


#
#==============================================================================
def format_value(value):
    """
        Render one CSV cell. Integers and strings are written as they are,
        reals with 17 significant digits; non-finite reals become ``nan``,
        ``inf`` or ``-inf``.

        :param value: a cell value
        :type value: int, float, str or None

        :rtype: str

        .. code-block:: python

            >>> format_value(0.1)
            '0.10000000000000001'
            >>> format_value(None)
            ''
    """

    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return '{0:.17g}'.format(value)

    return str(value)


#
#==============================================================================
class CSVWriter(object):
    """
        Writer of a single CSV table with a fixed header. The table can be
        preceded by a comment line carrying the package version, the command
        name and a timestamp; pass ``timestamp=False`` to omit it and obtain
        byte-identical files for identical inputs.

        :param name: output file name (``'-'`` for standard output)
        :param header: column names
        :param command: command name recorded in the comment line
        :param timestamp: whether to emit the comment line

        :type name: str
        :type header: list(str)
        :type command: str
        :type timestamp: bool
    """

    def __init__(self, name, header, command='', timestamp=True):
        """
            Constructor.
        """

        self.header = list(header)
        self.fobj = FileObject(name, mode='w', compression='use_ext')

        if timestamp:
            stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec='seconds')
            self.fobj.fp.write('# pyhill {0} {1} {2}\n'.format(__version__, command, stamp))

        self.writer = csv.writer(self.fobj.fp, lineterminator='\n')
        self.writer.writerow(self.header)

    def write(self, row):
        """
            Write one row given either as a sequence ordered like the header
            or as a dictionary keyed by column names.
        """

        if isinstance(row, dict):
            row = [row[column] for column in self.header]

        assert len(row) == len(self.header), 'Row does not match header'
        self.writer.writerow([format_value(value) for value in row])

    def close(self):
        """
            Close the underlying file.
        """

        if self.fobj:
            self.fobj.close()
            self.fobj = None

    def __enter__(self):
        """
            'with' constructor.
        """

        return self

    def __exit__(self, exc_type, exc_value, traceback):
        """
            'with' destructor.
        """

        self.close()
