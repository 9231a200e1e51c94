"""CSV/JSON output helpers shared by the CLI."""

import json
import os
import tempfile

SCHEMA_VERSION = 1


def format_value(x):
    return "%.17g" % float(x)


def _atomic_write_text(path, text):
    """Write via a temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, columns, rows):
    """Rows of floats, 17 significant digits, with a schema comment line."""
    lines = ["# schema=%d" % SCHEMA_VERSION, ",".join(columns)]
    for row in rows:
        lines.append(",".join(format_value(x) for x in row))
    _atomic_write_text(path, "\n".join(lines) + "\n")


def write_sidecar(csv_path, config):
    """JSON sidecar echoing the resolved run configuration."""
    base, _ = os.path.splitext(csv_path)
    path = base + ".json"
    _atomic_write_text(path, json.dumps(config, sort_keys=True, indent=2) + "\n")
    return path


def read_csv(path):
    """Parse a schema-versioned CSV into (columns, float rows)."""
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().strip()
        if first != "# schema=%d" % SCHEMA_VERSION:
            raise ValueError("unsupported schema line: %r" % first)
        columns = fh.readline().strip().split(",")
        rows = [[float(tok) for tok in line.split(",")] for line in fh if line.strip()]
    return columns, rows
