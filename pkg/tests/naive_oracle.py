"""Independent brute-force reference for the class search.

Deliberately naive: plain nested loops over row counts, patterns, short-row
and hole counts, its own copy of the circle-count identity, the legal
short-row table and the exact width/height formulas, and a from-scratch
(p, q) integer comparison for p + q*sqrt(3).  Shares nothing with
rowpack.search except the tuple vocabulary used to compare argmin sets.
"""
from __future__ import annotations

# pattern tags
FULL, SHORT_OFFSET, SHORT_OUTER = "full", "short_offset", "short_outer"


def _h_minus(pattern: str, h: int) -> int:
    if pattern == FULL:
        return 0
    if pattern == SHORT_OFFSET:
        return h // 2
    return h // 2 + 1


def _less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """a < b for a = (p, q) meaning p + q*sqrt(3), exact integer test."""
    p = a[0] - b[0]
    q = a[1] - b[1]
    if p == 0 and q == 0:
        return False
    if p >= 0 and q >= 0:
        return False
    if p <= 0 and q <= 0:
        return True
    if p > 0:  # q < 0: value negative iff p^2 < 3 q^2
        return p * p < 3 * q * q
    return 3 * q * q < p * p


def _interior_capacity(w: int, h: int, pattern: str) -> int:
    if h < 3:
        return 0
    total = 0
    for k in range(1, h - 1):
        if pattern == FULL:
            row = w
        elif pattern == SHORT_OFFSET:
            row = w if k % 2 == 0 else w - 1
        else:
            row = w if k % 2 == 1 else w - 1
        total += max(0, row - 2)
    return total


def _area(w: int, h: int, pattern: str, s: int) -> tuple[int, int]:
    if h == 0:
        return (2 * w * 2 * s, 0)
    width = 2 * w + 1 if pattern == FULL else 2 * w
    return (width * (2 + 2 * s), width * (h - 1))


def naive_best(n: int, d_max: int = 5):
    """(min_area (p, q), set of (w, h, pattern, s, s_minus, d)) by full loops."""
    best_area = None
    argmin: set[tuple] = set()

    def consider(w, h, pattern, s, s_minus, d):
        nonlocal best_area
        area = _area(w, h, pattern, s)
        if best_area is None or _less(area, best_area):
            best_area = area
            argmin.clear()
        if area == best_area:
            argmin.add((w, h, pattern, s, s_minus, d))

    # square grids: w x s, s_minus short rows, wider than tall
    for s in range(1, n + 1):
        for s_minus in range(0, s):
            if (n + s_minus) % s:
                continue
            w = (n + s_minus) // s
            if w < s or w < 1 or (s_minus > 0 and w < 2):
                continue
            consider(w, 0, FULL, s, s_minus, 0)

    # hex blocks and hybrids
    max_rows = n + d_max
    for h in range(2, max_rows + 1):
        for s in range(0, max_rows - h + 1):
            r = h + s
            for pattern in (FULL, SHORT_OFFSET, SHORT_OUTER):
                if pattern == SHORT_OUTER and (h % 2 == 0 or h < 3 or s > 0):
                    continue
                hm = _h_minus(pattern, h)
                for w in range(1, n + hm + s + d_max + 1):
                    if pattern != FULL and w < 2:
                        continue
                    for d in range(0, d_max + 1):
                        s_minus = w * r - hm - d - n
                        if not (0 <= s_minus <= s):
                            continue
                        if s_minus > 0 and w < 2:
                            continue
                        if d > 0 and (h < 3 or w < 3 or d > _interior_capacity(w, h, pattern)):
                            continue
                        consider(w, h, pattern, s, s_minus, d)
    return best_area, argmin
