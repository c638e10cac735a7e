#!/usr/bin/env python
# -*- coding: utf-8 -*-

import sys
import json
import logging

def to_json(payload):
    """Serialize a result document; key order is the insertion order of the payload."""
    return json.dumps(payload, ensure_ascii=False)

def canonical_json(payload):
    """Compact JSON with sorted keys, stable across runs and processes."""
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(',', ':'))

class MessageHandler:
    """Writes command results to stdout and notices to stderr"""

    def __init__(self, pretty=False, out=None, err=None):
        self.logger = logging.getLogger(__name__)
        self.pretty = pretty
        self.out = out
        self.err = err

    @property
    def out_stream(self):
        return self.out or sys.stdout

    @property
    def err_stream(self):
        return self.err or sys.stderr

    def show_result(self, payload):
        """
        Emit one result document

        Args:
            payload (dict): JSON-ready result
        """
        text = self.render_table(payload) if self.pretty else to_json(payload)
        self.out_stream.write(text)
        self.out_stream.write('\n')
        self.out_stream.flush()

    def show_lines(self, lines):
        """Emit plain lines (graph6 streams)."""
        for line in lines:
            self.out_stream.write(line)
            self.out_stream.write('\n')
        self.out_stream.flush()

    def show_info(self, message):
        self.logger.info(message)
        self.err_stream.write("%s\n" % message)

    def show_warning(self, message):
        self.logger.warning(message)
        self.err_stream.write("warning: %s\n" % message)

    def show_error(self, message):
        self.logger.error(message)
        self.err_stream.write("error: %s\n" % message)

    def render_table(self, payload):
        """
        Render a result document as aligned text

        Scalars become ``key  value`` rows; lists of flat dicts become
        column tables; anything else falls back to its JSON text.

        Args:
            payload (dict): JSON-ready result

        Returns:
            str: Rendered text
        """
        blocks = []
        scalars = []
        for key, value in payload.items():
            if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                blocks.append((key, value))
            else:
                scalars.append((key, value))

        lines = []
        if scalars:
            width = max(len(k) for k, _ in scalars)
            for key, value in scalars:
                lines.append("%s  %s" % (key.ljust(width), _cell(value)))
        for title, rows in blocks:
            lines.append("")
            lines.append("%s:" % title)
            lines.extend(_table(rows))
        return '\n'.join(lines)

def _cell(value):
    if isinstance(value, list) and all(isinstance(v, int) for v in value):
        return '(' + ','.join(str(v) for v in value) + ')'
    if isinstance(value, (list, dict)):
        return to_json(value)
    return str(value)

def _table(rows):
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = [[_cell(row.get(col, '')) for col in columns] for row in rows]
    widths = [max(len(col), *(len(r[i]) for r in cells)) for i, col in enumerate(columns)]
    header = '  '.join(col.ljust(w) for col, w in zip(columns, widths))
    rule = '  '.join('-' * w for w in widths)
    body = ['  '.join(c.rjust(w) if _numeric(c) else c.ljust(w) for c, w in zip(r, widths)) for r in cells]
    return [header, rule] + body

def _numeric(text):
    return text.lstrip('-').isdigit()
