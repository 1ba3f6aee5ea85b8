"""CSV and JSON-lines writers for CLI records."""

from __future__ import annotations

import csv
import json
from typing import Iterable, Optional, Sequence, TextIO

FORMATS = ("csv", "json")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(
    records: Iterable[dict],
    fields: Sequence[str],
    fmt: str,
    sink: TextIO,
    header: Optional[str] = None,
) -> int:
    """Write records to ``sink``; returns the number of records written.

    CSV gets a header row (preceded by a ``# header`` comment line when
    given). JSON is one object per line with no header, so an empty record
    set writes nothing.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    count = 0
    if fmt == "csv":
        if header:
            sink.write(f"# {header}\n")
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(fields)
        for rec in records:
            writer.writerow([_csv_cell(rec[f]) for f in fields])
            count += 1
    else:
        for rec in records:
            sink.write(json.dumps({f: rec[f] for f in fields}, separators=(",", ":")) + "\n")
            count += 1
    return count
