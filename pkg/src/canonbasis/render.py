"""
Text and SVG pictures of triangles, slice partitions and cones.

Triangles and slice diagrams share one staggered layout: the root ``[i, j]``
sits in row ``j - i`` (shortest roots on top) at horizontal position ``i + j``.

>>> from canonbasis.typea import QuiverA
>>> from canonbasis.arquiver import slices_for
>>> print(render(slices_for(QuiverA("RLRL")), "text"))
1 2 3 4 5
 1 2 3 4
  2 3 4
   2 3
    3
"""
from __future__ import annotations

from html import escape
from typing import Callable

from .arquiver import Component, SlicePartition, components_of
from .cones import ConeSpec
from .crystal import Triangle
from .typea import RootInterval, all_intervals

FORMATS = ("text", "svg")
EMPTY = "o"


class UnknownFormatError(ValueError):
    pass


def _labels(n: int, label: Callable[[RootInterval], str]) -> dict[RootInterval, str]:
    return {r: label(r) for r in all_intervals(n)}


def staggered_text(n: int, labels: dict[RootInterval, str]) -> str:
    width = max(len(s) for s in labels.values())
    unit = (width + 2) // 2
    lines = []
    for length in range(1, n + 1):
        line = ""
        for i in range(1, n - length + 2):
            r = RootInterval(i, i + length - 1)
            pos = (r.i + r.j - 2) * unit
            line = line.ljust(pos) + labels[r].rjust(width)
        lines.append(line.rstrip())
    return "\n".join(lines)


def staggered_svg(n: int, labels: dict[RootInterval, str], title: str = "") -> str:
    step, pad = 24, 20
    w = 2 * pad + step * (n - 1)
    h = 2 * pad + step * (n - 1) + (step if title else 0)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
    ]
    for r in all_intervals(n):
        x = pad + (r.i + r.j - 2) * step // 2
        y = pad + (r.j - r.i) * step
        out.append(
            f'<text x="{x}" y="{y}" font-family="monospace" font-size="12" '
            f'text-anchor="middle" dominant-baseline="middle">{escape(labels[r])}</text>'
        )
    if title:
        out.append(
            f'<text x="{w // 2}" y="{h - pad // 2}" font-family="monospace" font-size="12" '
            f'text-anchor="middle">{escape(title)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def component_labels(partition: SlicePartition, component: Component) -> dict[RootInterval, str]:
    """Slice numbers on the rows belonging to ``component``, ``o`` elsewhere."""
    rows = set(component.vertices)
    return _labels(
        partition.n,
        lambda r: str(partition.slice_of[r]) if r.length in rows else EMPTY,
    )


def _cone_lines(cone: ConeSpec) -> list[str]:
    return [cone.format_row(r) + (f"    [{r.label}]" if r.label else "") for r in cone.rows]


def _check(fmt: str) -> None:
    if fmt not in FORMATS:
        raise UnknownFormatError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def render(artifact: Triangle | SlicePartition | ConeSpec | tuple[SlicePartition, Component], fmt: str = "text") -> str:
    """
    Draw a triangle, a slice partition, one component view ``(partition, component)``
    or a cone.

    >>> print(render(Triangle.zero(3)))
    0 0 0
     0 0
      0
    """
    _check(fmt)
    if isinstance(artifact, ConeSpec):
        lines = _cone_lines(artifact)
        if fmt == "text":
            return "\n".join(lines)
        step, pad = 16, 12
        w = 2 * pad + 8 * max((len(s) for s in lines), default=0)
        h = 2 * pad + step * len(lines)
        body = [
            f'<text x="{pad}" y="{pad + step * (k + 1)}" font-family="monospace" font-size="12">{escape(s)}</text>'
            for k, s in enumerate(lines)
        ]
        return "\n".join(
            [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
             f'<rect width="{w}" height="{h}" fill="white"/>', *body, "</svg>"]
        ) + "\n"
    if isinstance(artifact, tuple):
        partition, component = artifact
        labels = component_labels(partition, component)
        title = f"component {component.index}"
        n = partition.n
    elif isinstance(artifact, SlicePartition):
        labels = _labels(artifact.n, lambda r: str(artifact.slice_of[r]))
        title, n = "", artifact.n
    elif isinstance(artifact, Triangle):
        labels = _labels(artifact.n, lambda r: str(artifact[r]))
        title, n = "", artifact.n
    else:
        raise TypeError(f"cannot render {type(artifact).__name__}")
    if fmt == "text":
        return staggered_text(n, labels)
    return staggered_svg(n, labels, title)


def render_components(partition: SlicePartition, fmt: str = "text") -> list[str]:
    """One view per component of the quiver, left to right."""
    return [render((partition, comp), fmt) for comp in components_of(partition.quiver)]
