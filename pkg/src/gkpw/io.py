"""Deterministic CSV, JSON and binary PGM (P5) writers.

Identical data always produces byte-identical files: floats are rendered
with 17 significant digits, JSON keys are sorted, and line endings are LF.
"""

import json

import numpy as np


def format_value(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.17g}"


def render_csv(header, rows) -> bytes:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    return ("\n".join(lines) + "\n").encode("ascii")


def write_csv(path, header, rows) -> None:
    with open(path, "wb") as f:
        f.write(render_csv(header, rows))


def render_json(obj) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True) + "\n").encode("utf-8")


def write_json(path, obj) -> None:
    with open(path, "wb") as f:
        f.write(render_json(obj))


def graymap_bytes(values: np.ndarray) -> bytes:
    """8-bit P5 graymap of a signed field.

    Linear map: gray = round(127.5 * (1 + v / max|v|)), so 0 renders as
    mid-gray (128), +max|v| as white (255) and -max|v| as black (0).
    values[i, j] = W(q_i, p_j); image rows run from p max (top) to p min.
    """
    values = np.asarray(values, dtype=float)
    peak = float(np.abs(values).max())
    if peak == 0.0:
        gray = np.full(values.shape, 128, dtype=np.uint8)
    else:
        gray = np.clip(np.rint(127.5 * (1.0 + values / peak)), 0, 255).astype(np.uint8)
    image = gray.T[::-1, :]
    height, width = image.shape
    return b"P5\n" + f"{width} {height}\n255\n".encode("ascii") + image.tobytes()


def write_pgm(path, values) -> None:
    with open(path, "wb") as f:
        f.write(graymap_bytes(values))
