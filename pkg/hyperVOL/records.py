"""
Output records for hyperVOL: CSV and JSON rendering, CSV parsing
"""

import json
import math
import re
import sys
from typing import List, NamedTuple, Tuple

FLOAT_FORMAT = "%.17g" # round-trip safe for doubles
FOOTER_PREFIX = "# "
# "-0" is the rendering of -0.0, so it stays a float
INT_PATTERN = re.compile(r"^(0|-?[1-9][0-9]*)$")

class OutputRecord(NamedTuple):
    columns: List[str]
    rows: List[list]
    footer: Tuple[Tuple[str, object], ...] = ()

def FormatValue(val):
    """
    Render one cell: ints as integers, floats with 17 significant digits,
    strings (sentinels) unchanged
    """
    if isinstance(val, bool): return str(int(val))
    if isinstance(val, int): return str(val)
    if isinstance(val, float): return FLOAT_FORMAT%val
    return str(val)

def ParseValue(token):
    """
    Inverse of FormatValue
    """
    if INT_PATTERN.match(token): return int(token)
    try:
        return float(token)
    except ValueError:
        return token

def RenderCSV(record):
    """
    Header row, one line per row, then footer lines "# name=value".
    LF line endings, no trailing delimiter.
    """
    lines = [",".join(record.columns)]
    for row in record.rows:
        lines.append(",".join([FormatValue(item) for item in row]))
    for key, val in record.footer:
        lines.append("%s%s=%s"%(FOOTER_PREFIX, key, FormatValue(val)))
    return "\n".join(lines)+"\n"

def ParseCSV(text):
    """
    Parse text written by RenderCSV back into an OutputRecord
    """
    lines = text.split("\n")
    if lines and lines[-1] == "": lines = lines[:-1]
    if len(lines) == 0:
        raise ValueError("Missing CSV header")
    columns = lines[0].split(",")
    rows = []
    footer = []
    for line in lines[1:]:
        if line.startswith(FOOTER_PREFIX):
            key, val = line[len(FOOTER_PREFIX):].split("=", 1)
            footer.append((key, ParseValue(val)))
        else:
            rows.append([ParseValue(item) for item in line.split(",")])
    return OutputRecord(columns, rows, footer)

def _json_value(val):
    if isinstance(val, float) and not math.isfinite(val):
        return json.dumps(FormatValue(val))
    if isinstance(val, (int, float)): return FormatValue(val)
    return json.dumps(str(val))

def _json_object(pairs):
    return "{" + ", ".join(["%s: %s"%(json.dumps(k), _json_value(v)) for k, v in pairs]) + "}"

def RenderJSON(record):
    """
    Array of objects, one per row, keys in column order. A footer becomes
    one final object holding the footer fields.
    """
    objects = [_json_object(zip(record.columns, row)) for row in record.rows]
    if record.footer:
        objects.append(_json_object(record.footer))
    if len(objects) == 0: return "[]\n"
    return "[\n  " + ",\n  ".join(objects) + "\n]\n"

def WriteRecord(record, fmt, out):
    """
    Write record in fmt ("csv" or "json") to out ("stdout" or a path)
    """
    if fmt == "json": text = RenderJSON(record)
    else: text = RenderCSV(record)
    if out == "stdout":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8", newline="") as outf:
            outf.write(text)
