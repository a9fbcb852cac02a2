"""Interferogram file format v1: a commented CSV that round-trips exactly.

Layout::

    # curlicue-interferogram v1
    # x_nm=<float>
    # M=<int>
    # d=<int>
    # r_nm=<...>          further "# key=value" lines are provenance and are
    # seed=<...>          preserved verbatim through parse/serialize cycles,
    ...                   including keys this package does not know about
    lambda_nm,intensity
    <float>,<float>
    ...

Floats are written with repr(), i.e. the shortest decimal that parses back
to the identical float64, so parse(serialize(ig)) == ig bit for bit.
"""

from __future__ import annotations

import os
from typing import Union

from .errors import FileFormatError
from .expsum import SumSpec
from .interferometer import Interferogram

VERSION_LINE = "# curlicue-interferogram v1"
_COLUMNS = "lambda_nm,intensity"
_CORE_KEYS = ("x_nm", "M", "d")
_ORDERED_PROVENANCE = ("r_nm", "seed", "mirror_sigma_nm", "detector_sigma")


def dumps_interferogram(ig: Interferogram) -> str:
    """Serialize to the v1 text format."""
    lines = [VERSION_LINE]
    lines.append(f"# x_nm={ig.displacement_unit_nm!r}")
    lines.append(f"# M={ig.sum_spec.path_count}")
    lines.append(f"# d={ig.sum_spec.order}")
    for key in _ORDERED_PROVENANCE:
        if key in ig.provenance:
            lines.append(f"# {key}={ig.provenance[key]}")
    for key in sorted(ig.provenance):
        if key not in _ORDERED_PROVENANCE:
            lines.append(f"# {key}={ig.provenance[key]}")
    lines.append(_COLUMNS)
    for s in ig.samples:
        lines.append(f"{s.wavelength_nm!r},{s.intensity!r}")
    return "\n".join(lines) + "\n"


def loads_interferogram(text: str) -> Interferogram:
    """Parse the v1 text format; raises FileFormatError on any deviation."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != VERSION_LINE:
        raise FileFormatError(f"first line must be {VERSION_LINE!r}")
    header: dict[str, str] = {}
    i = 1
    while i < len(lines) and lines[i].lstrip().startswith("#"):
        body = lines[i].lstrip()[1:].strip()
        key, sep, value = body.partition("=")
        if not sep or not key.strip():
            raise FileFormatError(f"malformed header line {i + 1}: {lines[i]!r}")
        header[key.strip()] = value.strip()
        i += 1
    if i >= len(lines) or lines[i].strip() != _COLUMNS:
        raise FileFormatError(f"expected column header {_COLUMNS!r} after the header block")
    samples = []
    for lineno, row in enumerate(lines[i + 1 :], start=i + 2):
        if not row.strip():
            continue
        parts = row.split(",")
        if len(parts) != 2:
            raise FileFormatError(f"line {lineno}: expected 2 columns, got {len(parts)}")
        try:
            samples.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise FileFormatError(f"line {lineno}: non-numeric data {row!r}") from None
    for key in _CORE_KEYS:
        if key not in header:
            raise FileFormatError(f"missing required header key {key!r}")
    try:
        x_nm = float(header["x_nm"])
        spec = SumSpec(int(header["M"]), int(header["d"]))
    except ValueError as exc:
        raise FileFormatError(f"bad header value: {exc}") from None
    provenance = {k: v for k, v in header.items() if k not in _CORE_KEYS}
    try:
        return Interferogram(x_nm, spec, tuple(samples), provenance)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None


def write_interferogram(ig: Interferogram, path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps_interferogram(ig))


def read_interferogram(path: Union[str, os.PathLike]) -> Interferogram:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_interferogram(fh.read())
