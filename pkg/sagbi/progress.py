"""
Progress reporting for long computations
Tagged console lines gated by a print level, plus an optional CSV run log.
"""

import csv
import os
import sys
from datetime import datetime

LOG_HEADER = ['Timestamp', 'Event', 'Degree', 'Generators', 'Detail']


class ProgressLog:
    """Console trace and CSV log for one computation."""

    def __init__(self, print_level=0, stream=None, log_file=None):
        """
        Set up the trace

        Args:
            print_level (int): 0 silent, 1 per-round summaries, 2 individual steps
            stream: Text stream for console lines (default: standard output)
            log_file (str): CSV file to append events to (optional)
        """
        self.print_level = print_level
        self.stream = stream
        self.log_file = log_file
        if log_file:
            self._initialize_log_file()

    def _initialize_log_file(self):
        """Create the CSV log with its header if it does not exist yet."""
        if not os.path.exists(self.log_file):
            with open(self.log_file, 'w', newline='') as f:
                writer = csv.writer(f)
                writer.writerow(LOG_HEADER)

    def enabled(self, level):
        return self.print_level >= level

    def emit(self, level, tag, message, degree='', generators=''):
        """Print a [TAG] line when the level allows it, and log it to the CSV file."""
        if self.print_level >= level:
            stream = self.stream if self.stream is not None else sys.stdout
            print(f"[{tag}] {message}", file=stream)
        if self.log_file and level <= max(self.print_level, 1):
            self.log_result(tag, message, degree, generators)

    def log_result(self, event, detail, degree='', generators=''):
        """Append one event row to the CSV log."""
        with open(self.log_file, 'a', newline='') as f:
            writer = csv.writer(f)
            writer.writerow([
                datetime.now().strftime('%Y-%m-%d %H:%M:%S.%f')[:-3],
                event,
                degree,
                generators,
                detail
            ])

    def child(self, print_level=None):
        """Same destinations, different print level."""
        level = self.print_level if print_level is None else print_level
        clone = ProgressLog(level, self.stream)
        clone.log_file = self.log_file
        return clone
