"""Exhaustive minimum-area search over the packing class.

For each n the search finds the exact minimum rectangle area over every
class member with that circle count, keeps the complete tie set (argmin),
and classifies n by whether the optimum may or must contain monovacancies.

The enumeration is exact but pruned: candidates are generated cell by cell
(hex rows h, square rows s, pattern), and a cell is skipped only when an
exact QuadInt lower bound on its area already exceeds the incumbent, so no
tie of the final minimum can ever be lost.  Loop cut-offs rely on two
provable monotonicity facts:

* for fixed h, the envelope (2n + h - 1) * H(h, s) - (h + s) * A is linear
  in s with positive slope once A <= 4n (guaranteed by the square-grid seed
  (n, 0, FULL, 1)), so the s loop stops at its first dead cell;
* for s = 0 the same envelope is convex in h, so the h loop stops once the
  bound is both positive and increasing.

Range scans may fan out over processes; results are assembled in n order,
so parallel and serial runs produce identical output.
"""
from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .packings import ClassConfig, RowPattern
from .quadint import QuadInt


class Classification(Enum):
    REGULAR = "regular"          # every argmin config has d = 0
    MAY_HAVE_HOLE = "may_hole"   # argmin mixes d = 0 and d >= 1
    MUST_HAVE_HOLE = "must_hole"  # every argmin config has d >= 1


@dataclass(frozen=True, slots=True)
class SearchResult:
    n: int
    min_area: QuadInt
    argmin: tuple[ClassConfig, ...]
    classification: Classification
    min_d: int
    shape_count: int

    @property
    def width(self) -> int:
        return self.argmin[0].width_units

    def height(self) -> QuadInt:
        return self.argmin[0].height()

    def density(self) -> float:
        return self.argmin[0].density()

    def aspect_ratio(self) -> float:
        return self.argmin[0].aspect_ratio()


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _square_grid_candidates(n: int) -> Iterator[ClassConfig]:
    """All canonical (w >= s) square grids with n circles, short rows allowed."""
    s = 1
    while s * s <= n + s - 1:
        w = _ceil_div(n, s)
        s_minus = w * s - n
        if s_minus <= s - 1 and w >= s and (s_minus == 0 or w >= 2):
            yield ClassConfig(w=w, h=0, s=s, s_minus=s_minus)
        s += 1


def _patterns_for(h: int, s: int) -> tuple[RowPattern, ...]:
    if h % 2 == 1 and h >= 3 and s == 0:
        return (RowPattern.FULL, RowPattern.SHORT_OFFSET, RowPattern.SHORT_OUTER)
    return (RowPattern.FULL, RowPattern.SHORT_OFFSET)


def _cell_configs(n: int, h: int, s: int, d_max: int) -> Iterator[ClassConfig]:
    """Every valid config with n circles, exactly h hex and s square rows."""
    r = h + s
    for pattern in _patterns_for(h, s):
        hm = pattern.h_minus(h)
        base = n + hm
        w = max(_ceil_div(base, r), 1 if pattern is RowPattern.FULL else 2)
        while True:
            rem = w * r - base  # s_minus + d
            if rem > s + d_max:
                break
            if rem >= 0:
                for d in range(max(0, rem - s), min(d_max, rem) + 1):
                    s_minus = rem - d
                    if d > 0 and (h < 3 or w < 3):
                        continue
                    if s_minus > 0 and w < 2:
                        continue
                    try:
                        yield ClassConfig(w=w, h=h, pattern=pattern, s=s, s_minus=s_minus, d=d)
                    except ValueError:
                        continue  # hole capacity and friends
            w += 1


def enumerate_candidates(n: int, d_max: int = 5) -> Iterator[ClassConfig]:
    """Stream every valid class member with n circles and at most d_max holes.

    Complete (no area pruning): square grids, pure hex blocks, hybrids, holed
    variants.  Bounds: w <= n, h + s <= n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    yield from _square_grid_candidates(n)
    for h in range(2, n + 1):
        for s in range(0, n - h + 1):
            yield from _cell_configs(n, h, s, d_max)


class _ArgminTracker:
    """Running exact minimum area plus the complete set of configs attaining it."""

    __slots__ = ("area", "configs")

    def __init__(self) -> None:
        self.area: QuadInt | None = None
        self.configs: list[ClassConfig] = []

    def consider(self, cfg: ClassConfig) -> None:
        area = cfg.area()
        if self.area is None:
            self.area = area
            self.configs = [cfg]
            return
        sgn = (area - self.area).sign()
        if sgn < 0:
            self.area = area
            self.configs = [cfg]
        elif sgn == 0:
            self.configs.append(cfg)


def best(n: int, d_max: int = 5) -> SearchResult:
    """Exact minimum area and the full argmin set for n circles."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    tracker = _ArgminTracker()
    for cfg in _square_grid_candidates(n):
        tracker.consider(cfg)
    assert tracker.area is not None  # (n, 0, FULL, 1) always exists

    # hex and hybrid cells with exact lower-bound pruning
    h = 2
    while True:
        cap = tracker.area
        g = _short_envelope_gap(n, h, 0, cap)
        if g.sign() > 0:
            # The gap is convex in h (quadratic, positive sqrt(3)*h^2 term),
            # so once positive and non-decreasing it stays positive forever.
            # Both points use the same cap; the final minimum is <= cap, which
            # only enlarges the gap, so no tie can hide beyond the break.
            if (g - _short_envelope_gap(n, h - 1, 0, cap)).sign() >= 0:
                break
        else:
            s = 0
            while _short_envelope_gap(n, h, s, tracker.area).sign() <= 0:
                _scan_cell(n, h, s, d_max, tracker)
                s += 1
        h += 1

    ordered = tuple(sorted(tracker.configs, key=ClassConfig.sort_key))
    ds = [c.d for c in ordered]
    if all(d == 0 for d in ds):
        cls = Classification.REGULAR
    elif all(d >= 1 for d in ds):
        cls = Classification.MUST_HAVE_HOLE
    else:
        cls = Classification.MAY_HAVE_HOLE
    shapes = {(c.width_units, c.height()) for c in ordered}
    return SearchResult(
        n=n,
        min_area=tracker.area,
        argmin=ordered,
        classification=cls,
        min_d=min(ds),
        shape_count=len(shapes),
    )


def _short_envelope_gap(n: int, h: int, s: int, area_cap: QuadInt) -> QuadInt:
    """(2n + h - 1) * H(h, s) - (h + s) * area_cap.

    Positive means every config in cell (h, s) — any pattern, any w, s_minus,
    d — has area strictly above area_cap: short patterns have width
    2w >= (2n + h - 1)/(h+s) and FULL widths (2w + 1) are wider still, while
    H(h, s) is the exact cell height.
    """
    height = QuadInt(2 + 2 * s, h - 1)
    return height * (2 * n + h - 1) - area_cap * (h + s)


def _scan_cell(n: int, h: int, s: int, d_max: int, tracker: _ArgminTracker) -> None:
    """Enumerate cell (h, s), skipping w values whose exact area exceeds best."""
    r = h + s
    height = QuadInt(2 + 2 * s, h - 1)
    for pattern in _patterns_for(h, s):
        hm = pattern.h_minus(h)
        base = n + hm
        w = max(_ceil_div(base, r), 1 if pattern is RowPattern.FULL else 2)
        while True:
            rem = w * r - base
            if rem > s + d_max:
                break
            width = 2 * w + 1 if pattern is RowPattern.FULL else 2 * w
            if (height * width - tracker.area).sign() > 0:
                break  # area grows with w
            if rem >= 0:
                for d in range(max(0, rem - s), min(d_max, rem) + 1):
                    s_minus = rem - d
                    if d > 0 and (h < 3 or w < 3):
                        continue
                    try:
                        cfg = ClassConfig(w=w, h=h, pattern=pattern, s=s, s_minus=s_minus, d=d)
                    except ValueError:
                        continue
                    tracker.consider(cfg)
            w += 1


def classify(n: int, d_max: int = 5) -> Classification:
    return best(n, d_max).classification


def irregular_scan(
    n_lo: int, n_hi: int, d_max: int = 5, jobs: int = 1
) -> list[int]:
    """All n in [n_lo, n_hi] whose class optimum may or must have holes."""
    return [
        r.n
        for r in scan_range(n_lo, n_hi, d_max=d_max, jobs=jobs)
        if r.classification is not Classification.REGULAR
    ]


def _best_worker(args: tuple[int, int]) -> SearchResult:
    n, d_max = args
    return best(n, d_max)


def scan_range(
    n_lo: int, n_hi: int, d_max: int = 5, jobs: int = 1
) -> list[SearchResult]:
    """best(n) for every n in [n_lo, n_hi], in ascending n order."""
    if not (1 <= n_lo <= n_hi):
        raise ValueError("need 1 <= n_lo <= n_hi")
    ns = range(n_lo, n_hi + 1)
    if jobs <= 1:
        return [best(n, d_max) for n in ns]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(_best_worker, [(n, d_max) for n in ns], chunksize=32)


@dataclass(frozen=True, slots=True)
class Milestones:
    """Smallest n hitting each monovacancy landmark, over a scanned range."""

    n_hi: int
    even_h_holed: int | None          # holed argmin config with even h and h_minus > 0
    first_min_d: dict[int, int | None]  # k -> smallest n with min_d == k (k = 2..5)
    max_min_d: int

    def to_json(self) -> dict:
        return {
            "n_hi": self.n_hi,
            "even_h_holed": self.even_h_holed,
            "first_min_d": {str(k): v for k, v in self.first_min_d.items()},
            "max_min_d": self.max_min_d,
        }


def milestones(n_hi: int, d_max: int = 5, jobs: int = 1,
               results: Iterable[SearchResult] | None = None) -> Milestones:
    """Monovacancy landmarks for 1..n_hi (reuses a prior scan if given)."""
    if results is None:
        results = scan_range(1, n_hi, d_max=d_max, jobs=jobs)
    even_h_holed = None
    first: dict[int, int | None] = {2: None, 3: None, 4: None, 5: None}
    max_min_d = 0
    for r in results:
        if r.n > n_hi:
            continue
        if even_h_holed is None and any(
            c.d >= 1 and c.h % 2 == 0 and c.h_minus > 0 for c in r.argmin
        ):
            even_h_holed = r.n
        if r.min_d in first and first[r.min_d] is None:
            first[r.min_d] = r.n
        max_min_d = max(max_min_d, r.min_d)
    return Milestones(n_hi=n_hi, even_h_holed=even_h_holed,
                      first_min_d=first, max_min_d=max_min_d)


def shape_census(n_lo: int, n_hi: int, d_max: int = 5, jobs: int = 1,
                 results: Iterable[SearchResult] | None = None) -> dict[int, int]:
    """n -> number of distinct optimal rectangle shapes."""
    if results is None:
        results = scan_range(n_lo, n_hi, d_max=d_max, jobs=jobs)
    return {r.n: r.shape_count for r in results if n_lo <= r.n <= n_hi}


# results file format -----------------------------------------------------------


def result_to_json(result: SearchResult) -> dict:
    rep = result.argmin[0]
    line = {
        "n": result.n,
        "area": result.min_area.to_json(),
        "width": rep.width_units,
        "height": {"p": rep.height().p, "q": rep.height().q},
        "density": rep.density(),
        "aspect": rep.aspect_ratio(),
        "class": result.classification.value,
        "min_d": result.min_d,
        "shapes": result.shape_count,
        "argmin": [c.to_json() for c in result.argmin],
    }
    if result.classification is not Classification.REGULAR:
        line["improvement"] = _improvement_json(result)
    return line


def _improvement_json(result: SearchResult) -> dict | None:
    from . import improve  # local import: improve depends on packings only

    for cfg in result.argmin:
        if cfg.d >= 1 and improve.applicable_move(cfg) is not improve.MoveKind.NONE:
            return improve.improved_metrics(cfg).to_json()
    return None


def result_from_json(obj: dict) -> SearchResult:
    argmin = tuple(ClassConfig.from_json(c) for c in obj["argmin"])
    return SearchResult(
        n=int(obj["n"]),
        min_area=QuadInt.from_json(obj["area"]),
        argmin=argmin,
        classification=Classification(obj["class"]),
        min_d=int(obj["min_d"]),
        shape_count=int(obj["shapes"]),
    )


def write_results(results: Iterable[SearchResult], path) -> None:
    """Line-delimited JSON, one SearchResult per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for result in results:
            fh.write(json.dumps(result_to_json(result), separators=(",", ":")))
            fh.write("\n")


def read_results(path) -> list[SearchResult]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                out.append(result_from_json(json.loads(line)))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise ValueError(f"line {lineno}: corrupt results line ({exc})") from exc
    return out
