"""
Reading inputs and writing results for the command line
"""

import csv
import json
import os
import tempfile
from fractions import Fraction

from rest_framework.renderers import JSONRenderer

from core.exceptions import InputError


def _canonical(data):
    """ Recursively sort mapping keys and turn fractions into strings """
    if isinstance(data, dict):
        return {
            str(key): _canonical(data[key]) for key in sorted(data, key=str)
        }
    if isinstance(data, (list, tuple)):
        return [_canonical(item) for item in data]
    if isinstance(data, Fraction):
        return str(data)
    return data


def render_json(data, indent=2):
    """ JSON text with sorted keys and shortest round-trip floats """
    renderer = JSONRenderer()
    content = renderer.render(
        _canonical(data),
        renderer_context={'indent': indent},
    )
    return content.decode('utf-8')


def atomic_write(path, text):
    """ Write through a temporary file in the target directory """
    directory = os.path.dirname(os.path.abspath(path))
    handle, temporary = tempfile.mkstemp(dir=directory, suffix='.tmp')
    try:
        with os.fdopen(handle, 'w', encoding='utf-8', newline='') as stream:
            stream.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


def write_json(path, data):
    atomic_write(path, render_json(data) + '\n')


def write_csv(path, header, rows):
    lines = [','.join(header)]
    for row in rows:
        lines.append(','.join(
            repr(float(value)) if isinstance(value, float) else str(value)
            for value in row
        ))
    atomic_write(path, '\n'.join(lines) + '\n')


def read_json(path):
    try:
        with open(path, encoding='utf-8') as stream:
            return json.load(stream)
    except OSError as exc:
        raise InputError(
            f'cannot read {path}: {exc.strerror}', path=path
        ) from exc
    except json.JSONDecodeError as exc:
        raise InputError(
            f'malformed JSON in {path}: {exc.msg}', path=path, line=exc.lineno
        ) from exc


def read_csv(path, columns):
    """
    Rows of a CSV file with a header naming `columns`, values parsed as
    floats. Errors carry the 1-based line number.
    """
    try:
        with open(path, encoding='utf-8', newline='') as stream:
            reader = csv.reader(stream)
            header = next(reader, None)
            if header is None or [c.strip() for c in header] != list(columns):
                raise InputError(
                    f'{path}: expected header {",".join(columns)}',
                    path=path, line=1,
                )
            rows = []
            for row in reader:
                if not row or not ''.join(row).strip():
                    continue
                if len(row) != len(columns):
                    raise InputError(
                        f'{path}:{reader.line_num}: expected {len(columns)} '
                        f'fields, got {len(row)}',
                        path=path, line=reader.line_num,
                    )
                try:
                    rows.append(tuple(float(value) for value in row))
                except ValueError as exc:
                    raise InputError(
                        f'{path}:{reader.line_num}: {exc}',
                        path=path, line=reader.line_num,
                    ) from exc
            return rows
    except OSError as exc:
        raise InputError(
            f'cannot read {path}: {exc.strerror}', path=path
        ) from exc
