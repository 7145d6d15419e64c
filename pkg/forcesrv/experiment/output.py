"""
Files written by a run: CSV tables, plot descriptions and the manifest.

CSV bodies depend only on the computed numbers; the timestamp goes into file names and
into the manifest header.
"""

import csv
import math
import os

from datetime import datetime, timezone

from flask import current_app

from forcesrv.model.common import NoSignal


def timestamp():
    return datetime.now(timezone.utc).strftime('%Y%m%dT%H%M%SZ')


def format_value(value, digits=None):
    """
    floats with `digits` significant digits; NoSignal and missing values become empty fields
    """
    digits = digits or current_app.config.get('FORCESRV_CSV_SIGNIFICANT_DIGITS', 12)
    if value is None or isinstance(value, NoSignal):
        return ''
    if isinstance(value, str):
        return value
    value = float(value)
    if math.isnan(value):
        return ''
    return '%.*g' % (digits, value)


class RunOutput(object):
    """
    names and writes every file of one run under `directory`, all sharing one timestamp
    """

    def __init__(self, directory, subcommand, stamp=None):
        self.directory = directory
        self.subcommand = subcommand
        self.stamp = stamp or timestamp()
        self.written = []
        if not os.path.isdir(directory):
            os.makedirs(directory)

    def path(self, part=None, extension='csv'):
        name = '%s_%s' % (self.subcommand, self.stamp)
        if part:
            name = '%s_%s' % (name, part)
        return os.path.join(self.directory, '%s.%s' % (name, extension))

    def write_csv(self, header, rows, part=None):
        """
        :param header: column names
        :param rows: iterables of values
        :param part: suffix distinguishing several tables of one run
        :return: path written
        """
        path = self.path(part)
        with open(path, 'w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_value(value) for value in row])
        self.written.append(path)
        current_app.logger.info('wrote %s' % path)
        return path

    def write_plot(self, title, x_column, x_label, y_label, series, part=None, csv_path=None, log_x=False, log_y=False):
        """
        renderer neutral plot description next to its CSV

        :param series: list of (label, column, style) with style one of line, points
        :return: path written
        """
        path = self.path(part, extension='plot.txt')
        lines = ['title: %s' % title,
                 'data: %s' % os.path.basename(csv_path or self.path(part)),
                 'x: %s' % x_column,
                 'x_label: %s' % x_label,
                 'x_scale: %s' % ('log' if log_x else 'linear'),
                 'y_label: %s' % y_label,
                 'y_scale: %s' % ('log' if log_y else 'linear')]
        for label, column, style in series:
            lines.append('series: %s | %s | %s' % (column, label, style))
        with open(path, 'w') as f:
            f.write('\n'.join(lines) + '\n')
        self.written.append(path)
        return path

    def write_manifest(self, experiment, extra=None):
        """
        the fully resolved experiment in SI units, readable back as an experiment file

        :param experiment: ExperimentConfig, or None for canned runs
        :param extra: list of (key, value) echoed as comments
        :return: path written
        """
        path = os.path.join(self.directory, '%s_%s.manifest' % (self.subcommand, self.stamp))
        lines = ['# %s run at %s' % (self.subcommand, self.stamp)]
        for key, value in extra or []:
            lines.append('# %s: %s' % (key, value))
        if experiment is not None:
            for section, entries in experiment.resolved():
                lines.append('[%s]' % section)
                for key, text in entries:
                    lines.append('%s = %s' % (key, text))
        for written in self.written:
            lines.append('# output: %s' % os.path.basename(written))
        with open(path, 'w') as f:
            f.write('\n'.join(lines) + '\n')
        current_app.logger.info('wrote %s' % path)
        return path
