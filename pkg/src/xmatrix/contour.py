"""Marching squares: zero-level polylines of a scalar field sampled on a grid."""
from __future__ import annotations

from collections import deque
from typing import Callable, Dict, List, Tuple

import numpy as np

# cell edges, named by the corners they join
BOTTOM, RIGHT, TOP, LEFT = 0, 1, 2, 3


def _edge_key(j: int, i: int, side: int) -> Tuple[str, int, int]:
    # shared edges get one key, so neighbouring cells link up
    if side == BOTTOM:
        return ("h", j, i)
    if side == TOP:
        return ("h", j + 1, i)
    if side == LEFT:
        return ("v", j, i)
    return ("v", j, i + 1)


def marching_squares(values: np.ndarray, xs: np.ndarray, ys: np.ndarray,
                     level: float = 0.0) -> List[np.ndarray]:
    """Polylines where ``values`` crosses ``level``.

    ``values[j, i]`` is the sample at ``(xs[i], ys[j])``. Crossing points are
    placed by linear interpolation along cell edges; saddle cells are split by
    the sign of the cell-center average. Cells are scanned row-major and each
    polyline is emitted when its first segment is met, so output order is
    deterministic. A closed curve repeats its first point at the end.
    """
    g = np.asarray(values, dtype=float) - level
    ny, nx = g.shape
    above = g > 0
    bl, br = above[:-1, :-1], above[:-1, 1:]
    tl, tr = above[1:, :-1], above[1:, 1:]
    case = bl.astype(np.uint8) | (br << 1) | (tr << 2) | (tl << 3)
    active = np.argwhere((case != 0) & (case != 15))

    points: Dict[tuple, Tuple[float, float]] = {}

    def crossing(j, i, side):
        key = _edge_key(j, i, side)
        if key not in points:
            if key[0] == "h":
                jj, ii = key[1], key[2]
                g0, g1 = g[jj, ii], g[jj, ii + 1]
                t = g0 / (g0 - g1)
                points[key] = (xs[ii] + t * (xs[ii + 1] - xs[ii]), ys[jj])
            else:
                jj, ii = key[1], key[2]
                g0, g1 = g[jj, ii], g[jj + 1, ii]
                t = g0 / (g0 - g1)
                points[key] = (xs[ii], ys[jj] + t * (ys[jj + 1] - ys[jj]))
        return key

    segments: List[Tuple[tuple, tuple]] = []
    for j, i in active:
        j, i = int(j), int(i)
        s_bl, s_br, s_tr, s_tl = bl[j, i], br[j, i], tr[j, i], tl[j, i]
        cut = []
        if s_bl != s_br:
            cut.append(BOTTOM)
        if s_br != s_tr:
            cut.append(RIGHT)
        if s_tr != s_tl:
            cut.append(TOP)
        if s_tl != s_bl:
            cut.append(LEFT)
        if len(cut) == 2:
            pairs = [tuple(cut)]
        else:
            mid = (g[j, i] + g[j, i + 1] + g[j + 1, i] + g[j + 1, i + 1]) / 4 > 0
            if mid == s_bl:
                pairs = [(BOTTOM, RIGHT), (TOP, LEFT)]
            else:
                pairs = [(LEFT, BOTTOM), (RIGHT, TOP)]
        for a, b in pairs:
            segments.append((crossing(j, i, a), crossing(j, i, b)))

    at_edge: Dict[tuple, List[int]] = {}
    for k, (a, b) in enumerate(segments):
        at_edge.setdefault(a, []).append(k)
        at_edge.setdefault(b, []).append(k)

    used = [False] * len(segments)

    def walk(start_key, seg):
        # follow the chain from ``start_key`` away from segment ``seg``
        out = []
        key = start_key
        while True:
            nxt = [k for k in at_edge[key] if k != seg and not used[k]]
            if not nxt:
                return out, key
            seg = nxt[0]
            used[seg] = True
            a, b = segments[seg]
            key = b if a == key else a
            out.append(key)

    polylines = []
    for k, (a, b) in enumerate(segments):
        if used[k]:
            continue
        used[k] = True
        chain = deque([a, b])
        fwd, end = walk(b, k)
        chain.extend(fwd)
        if end != a:
            back, _ = walk(a, k)
            chain.extendleft(back)
        polylines.append(np.array([points[key] for key in chain], dtype=float))
    return polylines


def sample(func: Callable[[np.ndarray, np.ndarray], np.ndarray], window, resolution: int):
    """Evaluate ``func(X, Y)`` on a ``resolution x resolution`` grid over ``window``."""
    x0, x1, y0, y1 = (float(v) for v in window)
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"empty window {window!r}")
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)
    X, Y = np.meshgrid(xs, ys)
    return func(X, Y), xs, ys
