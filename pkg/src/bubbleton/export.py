"""CSV, SVG, OBJ and JSON writers.  Every write goes through a temp file and a rename."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .geometry import PlanarCurve, SurfaceMesh


def atomic_write(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _num(v: float) -> str:
    # repr is shortest round-trip and never locale-dependent
    return repr(float(v) + 0.0)


def curve_csv(curve: PlanarCurve) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["x", "X", "Z"])
    for x, (X, Z) in zip(curve.x, curve.points):
        writer.writerow([_num(x), _num(X), _num(Z)])
    return buf.getvalue()


def curve_svg(curve: PlanarCurve, size: int = 800, margin: float = 0.05) -> str:
    """Polyline in a size x size viewBox, equal aspect, y axis pointing up."""
    pts = np.asarray(curve.points, dtype=float)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1])) or 1.0
    inner = size * (1 - 2 * margin)
    scale = inner / span
    centre = (lo + hi) / 2
    sx = size / 2 + (pts[:, 0] - centre[0]) * scale
    sy = size / 2 - (pts[:, 1] - centre[1]) * scale
    coords = " ".join(f"{a:.4f},{b:.4f}" for a, b in zip(sx, sy))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'  <rect width="{size}" height="{size}" fill="white"/>\n'
        f'  <polyline fill="none" stroke="black" stroke-width="1" points="{coords}"/>\n'
        "</svg>\n"
    )


def mesh_obj(mesh: SurfaceMesh) -> str:
    """Quad grid; vertices in row-major order of ``mesh.grid``, seam not welded."""
    nx, ny = mesh.shape
    lines = ["# quad grid %d x %d" % (nx, ny)]
    for p in mesh.grid.reshape(-1, 3):
        lines.append(f"v {_num(p[0])} {_num(p[1])} {_num(p[2])}")
    for i in range(nx - 1):
        for j in range(ny - 1):
            a = i * ny + j + 1
            lines.append(f"f {a} {a + 1} {a + ny + 1} {a + ny}")
    return "\n".join(lines) + "\n"


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
