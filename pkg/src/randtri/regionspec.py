"""Textual region descriptions: inline shorthands and JSON region files.

Inline shorthand::

    NAME[:KEY=VALUE[,KEY=VALUE...]]

    square                  unit square [0,1]^2
    disk[:R=1]              disk of radius R centered at the origin
    crescent                x <= x^2 + y^2 <= 1, anchored at the origin
    limacon:a=2             unit-area limacon about its pole (a >= 1)
    cardioid                limacon with a = 1
    triangle | equilateral  unit-area equilateral triangle
    regular:n=5             unit-area regular n-gon centered at the origin
    annulus:inner=0.5,outer=1
    slice-disk:a=0.25       unit-area disk minus the wedge |theta| < pi*a
    offset-disk:r=0.5       unit-area disk, default anchor at r*R on the x axis

Region file (JSON object); ``kind`` selects the allowed keys, unknown keys
are rejected::

    {"kind": "polygon", "vertices": [x0, y0, x1, y1, ...], "anchor": [x, y]}
    {"kind": "polar", "family": "limacon", "a": 2, "center": [0, 0]}
    {"kind": "polar", "family": "cardioid"}
    {"kind": "polar", "family": "circle", "R": 1, "center": [0, 0], "anchor": [0.2, 0]}
    {"kind": "slices", "family": "crescent"}
    {"kind": "slices", "family": "annulus", "inner": 0.5, "outer": 1}
    {"kind": "disk_slice", "a": 0.25}
    {"kind": "offset_disk", "r": 0.5}

``anchor`` is optional everywhere; without it the region's default anchor
is used (pole, center, or polygon centroid).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import replace
from typing import Optional

import numpy as np

from . import region as rg
from .errors import RegionSpecError

_SHORTHAND_KEYS = {
    "square": set(), "disk": {"R"}, "crescent": set(), "limacon": {"a"},
    "cardioid": set(), "triangle": set(), "equilateral": set(), "regular": {"n"},
    "annulus": {"inner", "outer"}, "slice-disk": {"a"}, "offset-disk": {"r"},
}


def _number(key: str, raw) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise RegionSpecError(f"field {key!r}: expected a number, got {raw!r}") from None
    if not math.isfinite(value):
        raise RegionSpecError(f"field {key!r}: value must be finite")
    return value


def _require(params: dict, key: str) -> float:
    if key not in params:
        raise RegionSpecError(f"missing required field {key!r}")
    return _number(key, params[key])


def _build(name: str, params: dict) -> rg.Region:
    if name == "square":
        return rg.unit_square()
    if name == "disk":
        return rg.Disk(radius=_number("R", params.get("R", 1.0)))
    if name == "crescent":
        return rg.crescent()
    if name == "limacon":
        return rg.limacon(_require(params, "a"))
    if name == "cardioid":
        return rg.cardioid()
    if name in ("triangle", "equilateral"):
        return rg.equilateral_triangle()
    if name == "regular":
        n = _require(params, "n")
        if n != int(n):
            raise RegionSpecError("field 'n': expected an integer")
        return rg.regular_polygon(int(n))
    if name == "annulus":
        return rg.annulus(_require(params, "inner"), _require(params, "outer"))
    if name == "slice-disk":
        return rg.DiskSlice(_require(params, "a"))
    if name == "offset-disk":
        return rg.OffsetDisk(r=_require(params, "r"))
    raise RegionSpecError(f"unknown region {name!r}")


def parse_shorthand(text: str) -> rg.Region:
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name not in _SHORTHAND_KEYS:
        known = ", ".join(sorted(_SHORTHAND_KEYS))
        raise RegionSpecError(f"unknown region {name!r} (known: {known})")
    params = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq:
            raise RegionSpecError(f"expected KEY=VALUE, got {item!r}")
        if key not in _SHORTHAND_KEYS[name]:
            raise RegionSpecError(f"region {name!r} does not take field {key!r}")
        params[key] = value.strip()
    return _build(name, params)


_FILE_KEYS = {
    "polygon": {"vertices"},
    "polar": {"family", "a", "R", "center"},
    "slices": {"family", "inner", "outer"},
    "disk_slice": {"a"},
    "offset_disk": {"r"},
}


def _point(key: str, raw) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != 2:
        raise RegionSpecError(f"field {key!r}: expected [x, y]")
    return np.array([_number(key, v) for v in raw])


def region_from_mapping(doc: dict) -> tuple[rg.Region, Optional[np.ndarray]]:
    """Build ``(region, anchor or None)`` from a decoded region document."""
    if not isinstance(doc, dict):
        raise RegionSpecError("region document must be a JSON object")
    kind = doc.get("kind")
    if kind not in _FILE_KEYS:
        raise RegionSpecError(f"field 'kind': expected one of {sorted(_FILE_KEYS)}, got {kind!r}")
    allowed = _FILE_KEYS[kind] | {"kind", "anchor"}
    for key in doc:
        if key not in allowed:
            raise RegionSpecError(f"field {key!r} is not allowed for kind {kind!r}")
    anchor = _point("anchor", doc["anchor"]) if "anchor" in doc else None

    if kind == "polygon":
        flat = doc.get("vertices")
        if not isinstance(flat, list) or len(flat) < 6 or len(flat) % 2:
            raise RegionSpecError("field 'vertices': expected a flat list of at least 3 (x, y) pairs")
        pts = np.array([_number("vertices", v) for v in flat]).reshape(-1, 2)
        region = rg.Polygon(pts)
    elif kind == "polar":
        family = doc.get("family")
        center = _point("center", doc["center"]) if "center" in doc else np.zeros(2)
        if family == "limacon":
            region = replace(rg.limacon(_require(doc, "a")), center=tuple(center))
        elif family == "cardioid":
            region = replace(rg.cardioid(), center=tuple(center))
        elif family == "circle":
            region = rg.Disk(radius=_require(doc, "R"), center=tuple(center))
        else:
            raise RegionSpecError(f"field 'family': unknown polar family {family!r}")
    elif kind == "slices":
        family = doc.get("family")
        if family == "crescent":
            region = rg.crescent()
        elif family == "annulus":
            region = rg.annulus(_require(doc, "inner"), _require(doc, "outer"))
        else:
            raise RegionSpecError(f"field 'family': unknown slice family {family!r}")
    elif kind == "disk_slice":
        region = rg.DiskSlice(_require(doc, "a"))
    else:
        region = rg.OffsetDisk(r=_require(doc, "r"))
    return region, anchor


def load_region_file(path) -> tuple[rg.Region, Optional[np.ndarray]]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegionSpecError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return region_from_mapping(doc)
    except RegionSpecError as exc:
        raise RegionSpecError(f"{path}: {exc}") from None


def resolve_region(text: str) -> tuple[rg.Region, Optional[np.ndarray]]:
    """A region file path, or an inline shorthand."""
    if os.path.isfile(text):
        return load_region_file(text)
    return parse_shorthand(text), None
