"""Helpers for pulling geometry back out of rendered SVG files."""

from __future__ import annotations

import xml.etree.ElementTree as ET

_NS = "{http://www.w3.org/2000/svg}"


def parse(path) -> ET.Element:
    return ET.parse(path).getroot()


def by_class(root: ET.Element, cls: str) -> list[ET.Element]:
    """All elements whose class attribute contains ``cls`` as a word."""
    found = []
    for el in root.iter():
        classes = el.get("class", "").split()
        if cls in classes:
            found.append(el)
    return found


def points_of(el: ET.Element) -> list[tuple[float, float]]:
    """Vertex list of a polyline/polygon element."""
    pairs = el.get("points", "").split()
    return [tuple(float(v) for v in pair.split(",")) for pair in pairs]


def tag_name(el: ET.Element) -> str:
    return el.tag.removeprefix(_NS)


def all_drawn_coordinates(root: ET.Element) -> list[tuple[float, float]]:
    """Every (x, y) pixel pair appearing in data geometry elements."""
    coords: list[tuple[float, float]] = []
    for cls in ("surface-line", "hv-line", "band-fill"):
        for el in by_class(root, cls):
            coords.extend(points_of(el))
    for el in by_class(root, "marker"):
        if tag_name(el) == "circle":
            coords.append((float(el.get("cx")), float(el.get("cy"))))
        else:
            x, y = float(el.get("x")), float(el.get("y"))
            w, h = float(el.get("width")), float(el.get("height"))
            coords.append((x + w / 2, y + h / 2))
    return coords
