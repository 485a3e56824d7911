"""Deterministic SVG rendering of packings, plus the aspect-ratio scatter CSV.

Output is byte-stable: all coordinates are printed with exactly six decimal
places and elements are emitted in a fixed order, so identical inputs yield
identical documents (goldens stay valid).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Iterable

from .packings import PackingRealization
from .search import SearchResult

_FMT = "{:.6f}"


@dataclass(frozen=True, slots=True)
class RenderOptions:
    scale: float = 20.0        # pixels per circle radius
    stroke_width: float = 1.0
    show_holes: bool = True
    show_labels: bool = False  # coordinates always print with 6 decimals

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def _f(value: float) -> str:
    return _FMT.format(value)


def to_svg(realization: PackingRealization, opts: RenderOptions = RenderOptions()) -> str:
    """One rectangle plus one circle per center; holes dashed with a '?'."""
    if not realization.is_valid(1e-9):
        raise ValueError("refusing to render an invalid realization")
    k = opts.scale
    w_px = realization.width * k
    h_px = realization.height * k
    sw = _f(opts.stroke_width)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w_px)}" height="{_f(h_px)}" '
        f'viewBox="0 0 {_f(w_px)} {_f(h_px)}">',
        f'<rect x="0" y="0" width="{_f(w_px)}" height="{_f(h_px)}" '
        f'fill="none" stroke="black" stroke-width="{sw}"/>',
    ]
    for x, y in realization.centers:
        cy = (realization.height - y) * k  # SVG y axis points down
        lines.append(
            f'<circle cx="{_f(x * k)}" cy="{_f(cy)}" r="{_f(realization.radius * k)}" '
            f'fill="none" stroke="black" stroke-width="{sw}"/>'
        )
    if opts.show_holes:
        for x, y in realization.holes:
            cy = (realization.height - y) * k
            lines.append(
                f'<circle cx="{_f(x * k)}" cy="{_f(cy)}" r="{_f(realization.radius * k)}" '
                f'fill="none" stroke="black" stroke-width="{sw}" stroke-dasharray="4 3"/>'
            )
            lines.append(
                f'<text x="{_f(x * k)}" y="{_f(cy + 0.25 * k)}" text-anchor="middle" '
                f'font-size="{_f(0.8 * k)}">?</text>'
            )
    if opts.show_labels:
        label = (
            f"{len(realization.centers)} circles in "
            f"{_f(realization.width)} x {_f(realization.height)}"
        )
        lines.append(
            f'<text x="{_f(0.2 * k)}" y="{_f(0.7 * k)}" font-size="{_f(0.6 * k)}">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def aspect_scatter_csv(results: Iterable[SearchResult]) -> str:
    """Rows (n, aspect) for purely hexagonal optima, plus the 2 - sqrt(3) row.

    An n is included only when every argmin configuration is a pure hex block
    (h >= 2, no square rows): square-grid optima and hybrid ties would make
    the best aspect ratio ambiguous.
    """
    lines = ["n,aspect"]
    for result in sorted(results, key=lambda r: r.n):
        if all(c.h >= 2 and c.s == 0 for c in result.argmin):
            lines.append(f"{result.n},{_f(result.aspect_ratio())}")
    lines.append(f"limit,{_f(2.0 - sqrt(3.0))}")
    return "\n".join(lines) + "\n"
