"""Bit-exact serialization: PPM images, TRIVOX voxel grids, OBJ meshes, CSV.

All byte layouts here are frozen and covered by golden-file tests:

* PPM: binary ``P6`` with maxval 255.  Inside cells are black, escaped cells
  are gray with g = floor(255 * min(escape_index, max_iter) / max_iter), the
  same value in all three channels.  Top pixel row is the top of the window.
* TRIVOX1: one ASCII header line ``TRIVOX1 nx ny nz xlo xhi ylo yhi zlo zhi``
  followed by nx*ny*nz occupancy bytes, 0 = escaped and 1 = inside, with x
  varying fastest, then y, then z.
* OBJ: the analytic octahedron as 6 vertices and 8 triangular faces with
  fixed 9-decimal coordinates (round half to even).
"""

from __future__ import annotations

import csv
import io
import numpy as np

from .raster import Raster2D, Raster3D, Window3D
from .sets import OctahedronSpec

__all__ = [
    "gray_image",
    "downsample_gray",
    "ppm_bytes",
    "gray_ppm_bytes",
    "write_ppm",
    "vox_bytes",
    "write_vox",
    "read_vox",
    "octahedron_obj_text",
    "write_octahedron_obj",
    "roots_csv_text",
    "verify_csv_text",
    "write_text",
    "write_bytes",
]

# face corners index the vertex order (+x, -x, +y, -y, +z, -z), 1-based
_OBJ_FACES = (
    (1, 3, 5), (3, 2, 5), (2, 4, 5), (4, 1, 5),
    (3, 1, 6), (2, 3, 6), (4, 2, 6), (1, 4, 6),
)


def gray_image(r: Raster2D) -> np.ndarray:
    """Grayscale array (ny, nx) of a raster, row iy = 0 at the window's ylo."""
    esc = np.minimum(r.escape, np.uint32(r.max_iter)).astype(np.uint64)
    gray = (esc * 255) // r.max_iter
    return np.where(r.escape == 0, 0, gray).astype(np.uint8)


def downsample_gray(gray: np.ndarray, factor: int) -> np.ndarray:
    """Box-average a grayscale array by an integer factor (rendering only)."""
    if factor < 1:
        raise ValueError("downsample factor must be >= 1")
    h, w = gray.shape
    if h % factor or w % factor:
        raise ValueError(f"shape {gray.shape} not divisible by factor {factor}")
    blocks = gray.reshape(h // factor, factor, w // factor, factor)
    return np.rint(blocks.astype(np.float64).mean(axis=(1, 3))).astype(np.uint8)


def gray_ppm_bytes(gray: np.ndarray) -> bytes:
    """PPM bytes from a grayscale array whose row 0 is the window's ylo."""
    h, w = gray.shape
    header = f"P6\n{w} {h}\n255\n".encode("ascii")
    rgb = np.repeat(gray[::-1, :, None], 3, axis=2)
    return header + rgb.tobytes()


def ppm_bytes(r: Raster2D) -> bytes:
    return gray_ppm_bytes(gray_image(r))


def vox_bytes(r: Raster3D) -> bytes:
    w = r.window
    fields = [str(w.nx), str(w.ny), str(w.nz)]
    fields += [repr(float(v)) for v in (w.xlo, w.xhi, w.ylo, w.yhi, w.zlo, w.zhi)]
    header = ("TRIVOX1 " + " ".join(fields) + "\n").encode("ascii")
    occupancy = np.where(r.escape == 0, 1, 0).astype(np.uint8)
    return header + occupancy.tobytes()


def read_vox(path) -> tuple[np.ndarray, tuple[float, ...]]:
    """Read a TRIVOX1 file back as (inside bool array (nz, ny, nx), bounds).

    bounds is (xlo, xhi, ylo, yhi, zlo, zhi).
    """
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise OSError(f"reading {path}: {e}") from e
    head, sep, payload = raw.partition(b"\n")
    tokens = head.decode("ascii").split()
    if not sep or len(tokens) != 10 or tokens[0] != "TRIVOX1":
        raise ValueError(f"{path}: not a TRIVOX1 file")
    nx, ny, nz = (int(t) for t in tokens[1:4])
    bounds = tuple(float(t) for t in tokens[4:10])
    if len(payload) != nx * ny * nz:
        raise ValueError(
            f"{path}: payload is {len(payload)} bytes, header implies {nx * ny * nz}"
        )
    occupancy = np.frombuffer(payload, dtype=np.uint8).reshape(nz, ny, nx)
    if not np.isin(occupancy, (0, 1)).all():
        raise ValueError(f"{path}: occupancy bytes must be 0 or 1")
    return occupancy == 1, bounds


def octahedron_obj_text(spec: OctahedronSpec) -> str:
    m = spec.half_diag
    vertices = [
        (m, 0.0, 0.0), (-m, 0.0, 0.0),
        (0.0, m, 0.0), (0.0, -m, 0.0),
        (0.0, 0.0, m), (0.0, 0.0, -m),
    ]
    lines = [f"v {x:.9f} {y:.9f} {z:.9f}" for x, y, z in vertices]
    lines += [f"f {a} {b} {c}" for a, b, c in _OBJ_FACES]
    return "\n".join(lines) + "\n"


def roots_csv_text(report) -> str:
    """CSV of a root report: value,multiplicity,bracket_lo,bracket_hi."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["value", "multiplicity", "bracket_lo", "bracket_hi"])
    for root in report.roots:
        writer.writerow([
            f"{root.value:.9f}",
            root.multiplicity,
            f"{root.bracket_lo:.9f}",
            f"{root.bracket_hi:.9f}",
        ])
    return buf.getvalue()


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.9f}"
    return str(value)


def verify_csv_text(rows) -> str:
    """CSV of verification rows: check_name,expected,observed,tolerance,pass."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_name", "expected", "observed", "tolerance", "pass"])
    for row in rows:
        writer.writerow([
            row.name,
            _cell(row.expected),
            _cell(row.observed),
            _cell(row.tolerance),
            "true" if row.passed else "false",
        ])
    return buf.getvalue()


def write_bytes(data: bytes, path) -> None:
    try:
        with open(path, "wb") as f:
            f.write(data)
    except OSError as e:
        raise OSError(f"writing {path}: {e}") from e


def write_text(text: str, path) -> None:
    try:
        with open(path, "w", encoding="ascii", newline="") as f:
            f.write(text)
    except OSError as e:
        raise OSError(f"writing {path}: {e}") from e


def write_ppm(r: Raster2D, path) -> None:
    write_bytes(ppm_bytes(r), path)


def write_vox(r: Raster3D, path) -> None:
    write_bytes(vox_bytes(r), path)


def write_octahedron_obj(spec: OctahedronSpec, path) -> None:
    write_text(octahedron_obj_text(spec), path)
