"""The candidate-packing class: row-structured packings of unit circles.

A configuration has h hexagonally alternating rows topped by s square-stacked
rows, with the longest row holding w circles.  Depending on the row pattern,
some hex rows are one circle short; s_minus of the square rows may be short
too, and d interior lattice sites may be left empty (monovacancies).  Circle
count follows

    n = w*(h + s) - h_minus - s_minus - d

where h_minus is determined by the pattern.  All lengths are in circle radii:
hex rows are sqrt(3) apart, square rows 2 apart, so widths are integers and
heights are QuadInt values (2 + 2s) + (h-1)*sqrt(3).

Geometry conventions (canonical representatives, one per congruence class):

* a single row is h=0, s=1 — never h=1;
* square grids are generated wider than tall (w >= s); the rotated twin is
  not enumerated;
* square rows always sit on top of the hex block, aligned with a full
  outermost hex row (for even h with SHORT_OFFSET the block is mirrored so
  the full outer row is the top one);
* short square rows sit outermost (top of the stack) and drop their
  rightmost circle;
* holes are rendered at canonical interior positions: middle hex row first,
  innermost positions first, never at a row end.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .quadint import QuadInt

_SQRT3 = math.sqrt(3.0)


class RowPattern(Enum):
    """Which hex rows are one circle short of w."""

    FULL = "full"                  # no short rows, h_minus = 0
    SHORT_OFFSET = "short_offset"  # offset rows short, h_minus = floor(h/2)
    SHORT_OUTER = "short_outer"    # outer rows short, h odd, h_minus = floor(h/2)+1

    def h_minus(self, h: int) -> int:
        if self is RowPattern.FULL:
            return 0
        if self is RowPattern.SHORT_OFFSET:
            return h // 2
        return h // 2 + 1


_PATTERN_ORDER = {RowPattern.FULL: 0, RowPattern.SHORT_OFFSET: 1, RowPattern.SHORT_OUTER: 2}


@dataclass(frozen=True, slots=True)
class PackingRealization:
    """Explicit circle centers inside a width x height rectangle (radius 1)."""

    centers: tuple[tuple[float, float], ...]
    width: float
    height: float
    radius: float = 1.0
    holes: tuple[tuple[float, float], ...] = ()

    def max_violation(self) -> float:
        """Largest constraint violation: wall overshoot or pair overlap depth."""
        worst = 0.0
        w, h = self.width, self.height
        pts = self.centers
        for x, y in pts:
            worst = max(worst, 1.0 - x, 1.0 - y, x - (w - 1.0), y - (h - 1.0))
        for i in range(len(pts)):
            xi, yi = pts[i]
            for j in range(i + 1, len(pts)):
                dx = xi - pts[j][0]
                dy = yi - pts[j][1]
                worst = max(worst, 2.0 - math.hypot(dx, dy))
        return worst

    def is_valid(self, tol: float = 1e-12) -> bool:
        return self.max_violation() <= tol

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "radius": self.radius,
            "centers": [[x, y] for x, y in self.centers],
            "holes": [[x, y] for x, y in self.holes],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PackingRealization":
        return cls(
            centers=tuple((float(x), float(y)) for x, y in obj["centers"]),
            width=float(obj["width"]),
            height=float(obj["height"]),
            radius=float(obj.get("radius", 1.0)),
            holes=tuple((float(x), float(y)) for x, y in obj.get("holes", ())),
        )


@dataclass(frozen=True, slots=True)
class ClassConfig:
    """One member of the search class.  Validated on construction."""

    w: int
    h: int
    pattern: RowPattern = RowPattern.FULL
    s: int = 0
    s_minus: int = 0
    d: int = 0

    def __post_init__(self) -> None:
        w, h, s, s_minus, d = self.w, self.h, self.s, self.s_minus, self.d
        pattern = self.pattern
        if w < 1 or s < 0 or d < 0 or not (0 <= s_minus <= s):
            raise ValueError(f"bad parameters {self}")
        if h == 1 or h < 0:
            raise ValueError("h must be 0 or >= 2 (a single row is h=0, s=1)")
        if h == 0:
            if pattern is not RowPattern.FULL or s < 1 or d != 0:
                raise ValueError("h=0 requires FULL pattern, s >= 1, d = 0")
            if s_minus >= s:
                raise ValueError("at least one full square row must set the width")
        if pattern is not RowPattern.FULL and w < 2:
            raise ValueError("short rows must be nonempty (w >= 2)")
        if pattern is RowPattern.SHORT_OUTER:
            if h < 3 or h % 2 == 0:
                raise ValueError("SHORT_OUTER needs odd h >= 3")
            if s > 0:
                raise ValueError("square rows on a short outer row degenerate; excluded")
        if s_minus > 0 and w < 2:
            raise ValueError("short square rows must be nonempty")
        if d > 0:
            if h < 3 or w < 3:
                raise ValueError("a monovacancy is an interior hole (h >= 3, w >= 3)")
            if d > self.hole_capacity():
                raise ValueError(f"{d} holes exceed interior capacity")
        if self.n < 1:
            raise ValueError("empty configuration")

    # counting --------------------------------------------------------------

    @property
    def h_minus(self) -> int:
        return self.pattern.h_minus(self.h)

    @property
    def n(self) -> int:
        """Circle count: w*(h+s) - h_minus - s_minus - d."""
        return self.w * (self.h + self.s) - self.h_minus - self.s_minus - self.d

    def _row_is_full(self, k: int) -> bool:
        """Whether hex row k (0-based, bottom up) holds w circles."""
        if self.pattern is RowPattern.FULL:
            return True
        if self.pattern is RowPattern.SHORT_OUTER:
            return k % 2 == 1
        # SHORT_OFFSET: even rows full, except mirrored when square rows
        # must sit on a full outer row of an even-h block.
        full_parity = 0
        if self.s > 0 and self.h % 2 == 0:
            full_parity = (self.h - 1) % 2
        return k % 2 == full_parity

    def hole_capacity(self) -> int:
        """Interior lattice sites: hex rows 1..h-2, row ends excluded."""
        if self.h < 3:
            return 0
        total = 0
        for k in range(1, self.h - 1):
            row_len = self.w if self._row_is_full(k) else self.w - 1
            total += max(0, row_len - 2)
        return total

    # exact dimensions -------------------------------------------------------

    @property
    def width_units(self) -> int:
        """Rectangle width in radii: 2w + 1 for a full hex block, else 2w."""
        if self.h >= 2 and self.pattern is RowPattern.FULL:
            return 2 * self.w + 1
        return 2 * self.w

    def height(self) -> QuadInt:
        """Rectangle height: (2 + 2s) + (h-1)*sqrt(3); plain 2s for h=0."""
        if self.h == 0:
            return QuadInt(2 * self.s, 0)
        return QuadInt(2 + 2 * self.s, self.h - 1)

    def area(self) -> QuadInt:
        return self.height() * self.width_units

    def density(self) -> float:
        return self.n * math.pi / self.area().to_float()

    def aspect_ratio(self) -> float:
        """height/width in canonical orientation (always <= 1)."""
        ratio = self.height().to_float() / self.width_units
        return ratio if ratio <= 1.0 else 1.0 / ratio

    # realization -------------------------------------------------------------

    def coordinates(self) -> PackingRealization:
        """Explicit centers (and hole positions) for this configuration."""
        rows: list[tuple[float, list[float]]] = []  # (y, xs) bottom-up
        w, h, s = self.w, self.h, self.s

        if h == 0:
            for j in range(s):
                y = 1.0 + 2.0 * j
                short = j >= s - self.s_minus
                count = w - 1 if short else w
                rows.append((y, [1.0 + 2.0 * i for i in range(count)]))
        else:
            for k in range(h):
                y = 1.0 + k * _SQRT3
                if self.pattern is RowPattern.FULL:
                    x0 = 1.0 if k % 2 == 0 else 2.0
                    count = w
                elif self._row_is_full(k):
                    x0, count = 1.0, w
                else:
                    x0, count = 2.0, w - 1
                rows.append((y, [x0 + 2.0 * i for i in range(count)]))
            # square rows stack on the (full) top hex row, same x alignment
            y_top = 1.0 + (h - 1) * _SQRT3
            top_x0 = rows[-1][1][0]
            for j in range(1, s + 1):
                short = j > s - self.s_minus
                count = w - 1 if short else w
                rows.append((y_top + 2.0 * j, [top_x0 + 2.0 * i for i in range(count)]))

        holes: list[tuple[float, float]] = []
        if self.d > 0:
            holes = self._hole_positions()
            hole_set = set(holes)
            rows = [(y, [x for x in xs if (x, y) not in hole_set]) for y, xs in rows]

        centers = tuple((x, y) for y, xs in rows for x in xs)
        if len(centers) != self.n:
            raise AssertionError(f"center count {len(centers)} != n {self.n} for {self}")
        return PackingRealization(
            centers=centers,
            width=float(self.width_units),
            height=self.height().to_float(),
            holes=tuple(holes),
        )

    def _hole_positions(self) -> list[tuple[float, float]]:
        mid = (self.h - 1) / 2.0
        cx = self.width_units / 2.0
        candidates: list[tuple[float, float, float, float]] = []
        for k in range(1, self.h - 1):
            y = 1.0 + k * _SQRT3
            if self.pattern is RowPattern.FULL:
                x0 = 1.0 if k % 2 == 0 else 2.0
                count = self.w
            elif self._row_is_full(k):
                x0, count = 1.0, self.w
            else:
                x0, count = 2.0, self.w - 1
            for i in range(1, count - 1):  # skip row ends
                x = x0 + 2.0 * i
                candidates.append((abs(k - mid), k, abs(x - cx), x))
        candidates.sort()
        chosen = candidates[: self.d]
        return [(x, 1.0 + k * _SQRT3) for _, k, _, x in chosen]

    # serialization -------------------------------------------------------------

    def sort_key(self) -> tuple:
        return (
            self.width_units,
            _PATTERN_ORDER[self.pattern],
            self.s,
            self.d,
            self.w,
            self.h,
            self.s_minus,
        )

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "h": self.h,
            "pattern": self.pattern.value,
            "s": self.s,
            "s_minus": self.s_minus,
            "d": self.d,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ClassConfig":
        return cls(
            w=int(obj["w"]),
            h=int(obj["h"]),
            pattern=RowPattern(obj["pattern"]),
            s=int(obj["s"]),
            s_minus=int(obj["s_minus"]),
            d=int(obj["d"]),
        )


def hybrid_pair(k: int) -> tuple[ClassConfig, ClassConfig]:
    """The two equally dense families at n = 15 + 4k.

    Returns a two-row packing (w = 8+2k) and a four-row hybrid (w = 4+k,
    three hex rows plus one square row); both hold 15+4k circles in exactly
    equal areas (32+8k) + (16+4k)*sqrt(3).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    a = ClassConfig(w=8 + 2 * k, h=2, pattern=RowPattern.SHORT_OFFSET)
    b = ClassConfig(w=4 + k, h=3, pattern=RowPattern.SHORT_OFFSET, s=1)
    return a, b
