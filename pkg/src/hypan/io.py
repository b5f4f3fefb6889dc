"""Distance-matrix CSV and point-cloud JSON ingestion/emission.

CSV format: n lines of n comma-separated decimal floats, no header, row i
holding the distances from point i. Cloud JSON: object with "dim" (int),
"points" (array of arrays), optional "labels" (array of strings).
"""

import json
import os
import tempfile

import numpy as np

from .errors import (
    AsymmetricInput,
    DimensionMismatch,
    EmptyCloud,
    NonzeroDiagonal,
    NotSquare,
    ParseError,
)
from .spaces import FiniteMetricSpace, PointCloud

FLOAT_FMT = "%.17g"  # 17 significant digits round-trip float64 exactly

ASYM_TOL = 1e-12  # relative; larger asymmetry is an input error


def load_distance_matrix(path: str) -> FiniteMetricSpace:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh]
    lines = [line for line in lines if line]
    rows = []
    for li, line in enumerate(lines):
        row = []
        for ci, cell in enumerate(line.split(",")):
            try:
                row.append(float(cell))
            except ValueError:
                raise ParseError(li + 1, ci + 1, f"not a number: {cell.strip()!r}")
        rows.append(row)
    if not rows:
        raise ParseError(1, 1, "empty file")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare(f"expected {n} columns in each of {n} rows")
    d = np.array(rows, dtype=float)
    if np.any(np.diagonal(d) != 0.0):
        i = int(np.argwhere(np.diagonal(d) != 0.0)[0, 0])
        raise NonzeroDiagonal(f"diagonal entry {i} is {d[i, i]!r}, expected 0")
    scale = max(float(np.max(np.abs(d))), 1e-300)
    if float(np.max(np.abs(d - d.T))) / scale > ASYM_TOL:
        raise AsymmetricInput("matrix is asymmetric beyond 1e-12 relative")
    d = (d + d.T) / 2.0
    return FiniteMetricSpace(n, d, provenance=f"file:{os.path.basename(path)}")


def save_distance_matrix(space: FiniteMetricSpace, path: str) -> None:
    body = "\n".join(
        ",".join(FLOAT_FMT % v for v in row) for row in space.dist
    )
    _atomic_write(path, body + "\n")


def load_point_cloud(path: str) -> PointCloud:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, exc.colno, exc.msg)
    if not isinstance(doc, dict) or "dim" not in doc or "points" not in doc:
        raise ParseError(1, 1, 'expected an object with "dim" and "points"')
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(1, 1, f'"dim" must be a positive integer, got {dim!r}')
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise EmptyCloud("points array is empty")
    for i, p in enumerate(points):
        if not isinstance(p, list) or len(p) != dim:
            raise DimensionMismatch(i)
        if not all(isinstance(v, (int, float)) for v in p):
            raise ParseError(1, 1, f"point {i} has a non-numeric coordinate")
    return PointCloud(dim, np.array(points, dtype=float), doc.get("labels"))


def save_point_cloud(cloud: PointCloud, path: str) -> None:
    doc = {"dim": cloud.dim, "points": [list(p) for p in cloud.points]}
    if cloud.labels is not None:
        doc["labels"] = list(cloud.labels)
    _atomic_write(path, json.dumps(doc, indent=1) + "\n")


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
