"""CSV output"""
import csv
import logging
import math
import numbers

from exceptions import InvalidArgument


def format_value(value):
    """
    Render one cell: 12 significant digits for reals, plain text otherwise
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        if math.isnan(value):
            return "nan"
        return f"{float(value):.12g}"
    return str(value)


def emit_csv(rows, columns, path):
    """
    Write rows (mappings) to path with a header in the given column order

    Nothing is written for an empty row list.
    """
    rows = list(rows)
    if not rows:
        raise InvalidArgument(f"Refusing to write an empty report to {path}")

    with open(path, "w", encoding="utf-8", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(row[column]) for column in columns])

    logging.info(f"Wrote {len(rows)} rows to {path}")
    return len(rows)
