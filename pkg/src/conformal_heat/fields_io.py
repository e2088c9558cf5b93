"""CSV field files with a JSON geometry header (or sidecar).

Two layouts, both plain CSV with complex values split into re/im columns
and numbers written with 17 significant digits:

* factored fields:   columns (m, s_index, re, im); one component per
  distinct m.  For N = 2 the m column holds the signed angular mode, so the
  degree is |m|; for N = 1 it is the sign parity 0/1; for N >= 3 the degree.
* N = 1 / N = 2 grid fields:  columns (angle_index, s_index, re, im).

The grid geometry travels either in a leading comment line

    # geometry: {"kind": "factored", "dim": 3, "s_min": -16.0, ...}

or in a JSON sidecar next to the data file (same path plus ".json"), which
wins when both are present.  Other '#' lines are ignored.
"""

from __future__ import annotations

import json
import os
from typing import Iterable, TextIO

import numpy as np

from .errors import FieldFormatError
from .log_radial import LogRadialGrid, RadialSamples
from .spherical import FactoredField, GridField2D

_FMT = "{:.17g}"


def format_float(x: float) -> str:
    return _FMT.format(float(x))


def _geometry_from_lines(lines: list[str]) -> dict | None:
    for line in lines:
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("geometry:"):
                try:
                    return json.loads(body[len("geometry:"):])
                except json.JSONDecodeError as exc:
                    raise FieldFormatError(f"bad geometry header: {exc}") from exc
    return None


def _load_geometry(path: str, lines: list[str]) -> dict:
    sidecar = path + ".json"
    if os.path.exists(sidecar):
        try:
            with open(sidecar) as fp:
                return json.load(fp)
        except (OSError, json.JSONDecodeError) as exc:
            raise FieldFormatError(f"bad geometry sidecar {sidecar}: {exc}") from exc
    geo = _geometry_from_lines(lines)
    if geo is None:
        raise FieldFormatError(f"{path}: no geometry header or sidecar found")
    return geo


def _grid_from_geometry(geo: dict) -> LogRadialGrid:
    try:
        return LogRadialGrid(
            dim=int(geo["dim"]),
            s_min=float(geo["s_min"]),
            s_max=float(geo["s_max"]),
            n=int(geo["n"]),
        )
    except KeyError as exc:
        raise FieldFormatError(f"geometry missing key {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise FieldFormatError(f"bad geometry value: {exc}") from exc


def _data_rows(lines: Iterable[str], n_cols: int, what: str):
    header_allowed = True
    for i, raw in enumerate(lines):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if not parts[0].lstrip("+-").replace(".", "", 1)[:1].isdigit():
            if header_allowed:
                header_allowed = False
                continue  # the single column-name row
            raise FieldFormatError(f"{what}: row {i + 1} is not numeric")
        header_allowed = False
        if len(parts) != n_cols:
            raise FieldFormatError(f"{what}: row {i + 1} has {len(parts)} columns, expected {n_cols}")
        try:
            yield [float(p) for p in parts]
        except ValueError as exc:
            raise FieldFormatError(f"{what}: row {i + 1}: {exc}") from exc


def read_field_file(path: str):
    """Read a field file; returns a list[FactoredField] or a GridField2D."""
    try:
        with open(path) as fp:
            lines = fp.readlines()
    except OSError as exc:
        raise FieldFormatError(f"cannot read {path}: {exc}") from exc
    geo = _load_geometry(path, lines)
    kind = geo.get("kind")
    grid = _grid_from_geometry(geo)
    if kind == "factored":
        buckets: dict[int, np.ndarray] = {}
        for m_f, j_f, re, im in _data_rows(lines, 4, path):
            m, j = int(m_f), int(j_f)
            if not 0 <= j < grid.n:
                raise FieldFormatError(f"{path}: s_index {j} out of range")
            buckets.setdefault(m, np.zeros(grid.n, dtype=complex))[j] = re + 1j * im
        out = []
        for m in sorted(buckets):
            mode = m if grid.dim <= 2 else None
            degree = abs(m) if grid.dim == 2 else m
            out.append(FactoredField(degree, RadialSamples(grid, buckets[m]), mode))
        if not out:
            raise FieldFormatError(f"{path}: no data rows")
        return out
    if kind == "grid2d":
        n_phi = int(geo.get("n_phi", 2 if grid.dim == 1 else 0))
        if n_phi <= 0:
            raise FieldFormatError(f"{path}: geometry missing n_phi")
        values = np.zeros((n_phi, grid.n), dtype=complex)
        for a_f, j_f, re, im in _data_rows(lines, 4, path):
            a, j = int(a_f), int(j_f)
            if not (0 <= a < n_phi and 0 <= j < grid.n):
                raise FieldFormatError(f"{path}: index ({a}, {j}) out of range")
            values[a, j] = re + 1j * im
        return GridField2D(grid, values)
    raise FieldFormatError(f"{path}: unknown field kind {kind!r}")


def _write_header(fp: TextIO, geometry: dict, config: dict | None) -> None:
    fp.write("# geometry: " + json.dumps(geometry, sort_keys=True) + "\n")
    if config:
        fp.write("# config: " + json.dumps(config, sort_keys=True) + "\n")


def write_factored(fp: TextIO, fields: list[FactoredField], config: dict | None = None) -> None:
    grid = fields[0].radial.grid
    geometry = {
        "kind": "factored",
        "dim": grid.dim,
        "s_min": grid.s_min,
        "s_max": grid.s_max,
        "n": grid.n,
    }
    _write_header(fp, geometry, config)
    fp.write("m,s_index,re,im\n")
    for f in fields:
        key = f.mode if grid.dim == 2 else (f.mode if grid.dim == 1 else f.degree)
        for j, v in enumerate(f.radial.values):
            fp.write(
                f"{key},{j},{format_float(v.real)},{format_float(v.imag)}\n"
            )


def write_grid2d(fp: TextIO, field: GridField2D, config: dict | None = None) -> None:
    grid = field.grid
    geometry = {
        "kind": "grid2d",
        "dim": grid.dim,
        "s_min": grid.s_min,
        "s_max": grid.s_max,
        "n": grid.n,
        "n_phi": field.n_phi,
    }
    _write_header(fp, geometry, config)
    fp.write("angle_index,s_index,re,im\n")
    for a in range(field.n_phi):
        for j in range(grid.n):
            v = field.values[a, j]
            fp.write(f"{a},{j},{format_float(v.real)},{format_float(v.imag)}\n")


def write_field_file(path: str, field_or_fields, config: dict | None = None) -> None:
    with open(path, "w") as fp:
        if isinstance(field_or_fields, GridField2D):
            write_grid2d(fp, field_or_fields, config)
        else:
            write_factored(fp, list(field_or_fields), config)


def read_points(path: str) -> list[tuple[float, float, float]]:
    """Read kernel query points (r, r_prime, t) from CSV; '#' lines skipped."""
    try:
        with open(path) as fp:
            lines = fp.readlines()
    except OSError as exc:
        raise FieldFormatError(f"cannot read {path}: {exc}") from exc
    return [(r, rp, t) for r, rp, t in _data_rows(lines, 3, path)]
