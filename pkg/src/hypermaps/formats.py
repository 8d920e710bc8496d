"""Text renderings of a coefficient table."""
from __future__ import annotations

import csv
import io
import json

from hypermaps.interpolate import CoeffTable

__all__ = ["FORMATS", "format_csv", "format_json", "format_walsh", "render"]


def format_csv(table: CoeffTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["v", "e", "f", "count"])
    writer.writerows(table.rows())
    return buf.getvalue()


def format_json(table: CoeffTable) -> str:
    doc = {
        "darts": table.r,
        "entries": [
            {"v": v, "e": e, "f": f, "count": str(count)} for v, e, f, count in table.rows()
        ],
        "total": str(table.total()),
    }
    return json.dumps(doc, indent=2) + "\n"


def format_walsh(table: CoeffTable) -> str:
    """Fixed-width block: ``r=N:`` title, ``v e f | N`` header, one row per entry.

    Rows are ordered by faces, then edges, then vertices.
    """
    rows = table.walsh_rows()
    w = max(2, len(str(table.r + 2)))
    cw = max([1] + [len(str(row[3])) for row in rows])
    lines = [f"r={table.r}:", f"{'v':>{w}} {'e':>{w}} {'f':>{w}} | {'N':>{cw}}"]
    lines.append("-" * (3 * w + 3) + "+" + "-" * (cw + 1))
    for v, e, f, count in rows:
        lines.append(f"{v:>{w}} {e:>{w}} {f:>{w}} | {count:>{cw}}")
    return "\n".join(lines) + "\n"


FORMATS = {"csv": format_csv, "json": format_json, "walsh": format_walsh}


def render(table: CoeffTable, fmt: str) -> str:
    try:
        return FORMATS[fmt](table)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {sorted(FORMATS)}") from None
